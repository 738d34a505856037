#include "catkit/rel.hpp"

#include <stdexcept>

namespace catkit::rel {

BoolRelation::BoolRelation(int src_size, int dst_size) : src_(src_size), dst_(dst_size) {
    if (src_size < 0 || dst_size < 0) throw std::invalid_argument("relation sizes must be nonnegative");
    matrix_.assign(static_cast<std::size_t>(src_size) * dst_size, 0);
}

BoolRelation::BoolRelation(int src_size, int dst_size, std::vector<std::uint8_t> matrix)
    : src_(src_size), dst_(dst_size), matrix_(std::move(matrix)) {
    if (src_size < 0 || dst_size < 0) throw std::invalid_argument("relation sizes must be nonnegative");
    if (matrix_.size() != static_cast<std::size_t>(src_size) * dst_size)
        throw std::invalid_argument("relation matrix does not match declared sizes");
    for (std::uint8_t& v : matrix_) v = v ? 1 : 0;
}

BoolRelation BoolRelation::identity(int n) {
    BoolRelation r(n, n);
    for (int i = 0; i < n; ++i) r.set(i, i, true);
    return r;
}

std::string BoolRelation::to_string() const {
    std::string out = std::to_string(src_) + "->" + std::to_string(dst_) + ":[";
    for (int y = 0; y < dst_; ++y) {
        if (y) out += " ";
        for (int x = 0; x < src_; ++x) out += at(y, x) ? '1' : '0';
    }
    return out + "]";
}

BoolRelation compose(const BoolRelation& s, const BoolRelation& r) {
    if (s.src_size() != r.dst_size())
        throw std::invalid_argument("compose: intermediate set sizes differ (" +
                                    std::to_string(r.dst_size()) + " vs " +
                                    std::to_string(s.src_size()) + ")");
    BoolRelation out(r.src_size(), s.dst_size());
    for (int z = 0; z < s.dst_size(); ++z)
        for (int x = 0; x < r.src_size(); ++x) {
            bool hit = false;
            for (int y = 0; y < r.dst_size() && !hit; ++y) hit = r.at(y, x) && s.at(z, y);
            out.set(z, x, hit);
        }
    return out;
}

BoolRelation dagger(const BoolRelation& r) {
    BoolRelation out(r.dst_size(), r.src_size());
    for (int y = 0; y < r.dst_size(); ++y)
        for (int x = 0; x < r.src_size(); ++x) out.set(x, y, r.at(y, x));
    return out;
}

BoolRelation tensor(const BoolRelation& r, const BoolRelation& s) {
    BoolRelation out(r.src_size() * s.src_size(), r.dst_size() * s.dst_size());
    for (int y = 0; y < r.dst_size(); ++y)
        for (int yp = 0; yp < s.dst_size(); ++yp)
            for (int x = 0; x < r.src_size(); ++x)
                for (int xp = 0; xp < s.src_size(); ++xp)
                    out.set(y * s.dst_size() + yp, x * s.src_size() + xp, r.at(y, x) && s.at(yp, xp));
    return out;
}

std::vector<BoolRelation> all_relations(int src_size, int dst_size) {
    int bits = src_size * dst_size;
    if (bits > 20) throw std::invalid_argument("all_relations: enumeration too large");
    std::vector<BoolRelation> out;
    out.reserve(static_cast<std::size_t>(1) << bits);
    for (std::uint32_t pattern = 0; pattern < (static_cast<std::uint32_t>(1) << bits); ++pattern) {
        std::vector<std::uint8_t> m(static_cast<std::size_t>(bits));
        for (int b = 0; b < bits; ++b) m[static_cast<std::size_t>(b)] = (pattern >> b) & 1u;
        out.emplace_back(src_size, dst_size, std::move(m));
    }
    return out;
}

BoolRelation random_relation(Rng& rng, int src_size, int dst_size) {
    BoolRelation r(src_size, dst_size);
    for (int y = 0; y < dst_size; ++y)
        for (int x = 0; x < src_size; ++x) r.set(y, x, rng.coin());
    return r;
}

} // namespace catkit::rel
