#include "catkit/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace catkit::io {

using nlohmann::json;

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw IoError("matrix literal must be a nonempty array of rows");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty())
        throw IoError("matrix rows must be nonempty arrays of [re, im] pairs");
    int cols = static_cast<int>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw IoError("matrix rows must all have the same length");
        for (int c = 0; c < cols; ++c) {
            const json& e = row[c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw IoError("matrix entries must be [re, im] number pairs");
            m.at(r, c) = {e[0].get<double>(), e[1].get<double>()};
        }
    }
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back({m.at(r, c).real(), m.at(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

rel::BoolRelation relation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("src") || !j.contains("dst") || !j.contains("rows"))
        throw IoError("relation literal must be {\"src\", \"dst\", \"rows\"}");
    if (!j["src"].is_number_integer() || !j["dst"].is_number_integer())
        throw IoError("relation src and dst must be integers");
    int src = j["src"].get<int>();
    int dst = j["dst"].get<int>();
    if (src < 0 || dst < 0) throw IoError("relation src and dst must be nonnegative");
    const json& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != dst)
        throw IoError("relation rows must be an array of dst rows");
    rel::BoolRelation r(src, dst);
    for (int y = 0; y < dst; ++y) {
        const json& row = rows[y];
        if (!row.is_array() || static_cast<int>(row.size()) != src)
            throw IoError("relation rows must each have src entries");
        for (int x = 0; x < src; ++x) {
            const json& e = row[x];
            if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1))
                throw IoError("relation entries must be 0 or 1");
            r.set(y, x, e.get<int>() == 1);
        }
    }
    return r;
}

json relation_to_json(const rel::BoolRelation& r) {
    json rows = json::array();
    for (int y = 0; y < r.dst_size(); ++y) {
        json row = json::array();
        for (int x = 0; x < r.src_size(); ++x) row.push_back(r.at(y, x) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return json{{"src", r.src_size()}, {"dst", r.dst_size()}, {"rows", std::move(rows)}};
}

finset::FiniteSet set_from_json(const json& j) {
    if (!j.is_array()) throw IoError("set literal must be an array of label strings");
    std::vector<finset::Label> labels;
    for (const json& e : j) {
        if (!e.is_string()) throw IoError("set elements must be strings");
        labels.push_back(finset::Label::atom(e.get<std::string>()));
    }
    return finset::FiniteSet(std::move(labels));
}

finset::FunctionMorphism function_from_json(const json& j, const finset::FiniteSet& dom,
                                            const finset::FiniteSet& cod) {
    if (!j.is_object()) throw IoError("function literal must be an object of label -> label");
    std::map<std::string, finset::Label> dom_by_name, cod_by_name;
    for (const finset::Label& l : dom.labels()) dom_by_name.emplace(l.to_string(), l);
    for (const finset::Label& l : cod.labels()) cod_by_name.emplace(l.to_string(), l);
    std::map<finset::Label, finset::Label> table;
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto d = dom_by_name.find(it.key());
        if (d == dom_by_name.end())
            throw IoError("function key '" + it.key() + "' is not in the domain");
        if (!it.value().is_string())
            throw IoError("function values must be label strings");
        std::string v = it.value().get<std::string>();
        auto c = cod_by_name.find(v);
        if (c == cod_by_name.end())
            throw IoError("function value '" + v + "' is not in the codomain");
        table.emplace(d->second, c->second);
    }
    return finset::FunctionMorphism(dom, cod, std::move(table));
}

tqft::FrobeniusData frobenius_from_json(const json& j) {
    if (!j.is_object()) throw IoError("frobenius literal must be an object");
    for (const char* key : {"dim", "unit", "mult", "counit"})
        if (!j.contains(key)) throw IoError(std::string("frobenius literal is missing \"") + key + "\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
        throw IoError("frobenius dim must be a positive integer");
    tqft::FrobeniusData data;
    data.dim = j["dim"].get<int>();
    data.unit = matrix_from_json(j["unit"]);
    data.mult = matrix_from_json(j["mult"]);
    data.counit = matrix_from_json(j["counit"]);
    return data;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

tqft::FrobeniusData load_frobenius_file(const std::string& path) {
    return frobenius_from_json(load_json_file(path));
}

namespace {

template <class T>
std::map<std::string, T> parse_objects(const json& j, const dsl::Signature& sig,
                                       T (*read)(const json&)) {
    if (!j.is_object()) throw IoError("\"objects\" must map atoms to object literals");
    std::map<std::string, T> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!sig.has_atom(it.key()))
            throw IoError("object '" + it.key() + "' is not declared in the signature");
        out.emplace(it.key(), read(it.value()));
    }
    for (const std::string& atom : sig.atoms)
        if (!out.count(atom)) throw IoError("object '" + atom + "' has no binding");
    return out;
}

int read_dimension(const json& j) {
    if (!j.is_number_integer() || j.get<int>() < 1)
        throw IoError("finhilb objects must be positive integer dimensions");
    return j.get<int>();
}

int read_size(const json& j) {
    if (!j.is_number_integer() || j.get<int>() < 0)
        throw IoError("rel objects must be nonnegative integer sizes");
    return j.get<int>();
}

int product_dim(const std::vector<std::string>& names, const std::map<std::string, int>& objects) {
    return std::accumulate(names.begin(), names.end(), 1,
                           [&](int acc, const std::string& n) { return acc * objects.at(n); });
}

void require_generators_cover(const json& gens, const dsl::Signature& sig) {
    if (!gens.is_object()) throw IoError("\"generators\" must map names to morphism literals");
    for (auto it = gens.begin(); it != gens.end(); ++it)
        if (!sig.generators.count(it.key()))
            throw IoError("generator '" + it.key() + "' is not declared in the signature");
    for (const auto& [name, decl] : sig.generators)
        if (!gens.contains(name)) throw IoError("generator '" + name + "' has no binding");
}

FinHilbInterp parse_finhilb(const json& j, const dsl::Signature& sig) {
    FinHilbInterp interp;
    interp.objects = parse_objects<int>(j.at("objects"), sig, read_dimension);
    const json& gens = j.at("generators");
    require_generators_cover(gens, sig);
    for (const auto& [name, decl] : sig.generators) {
        ComplexMatrix m = matrix_from_json(gens.at(name));
        int want_cols = product_dim(decl.dom, interp.objects);
        int want_rows = product_dim(decl.cod, interp.objects);
        if (m.cols() != want_cols || m.rows() != want_rows)
            throw dsl::TypeError("generator '" + name + "' should be a " +
                                 std::to_string(want_rows) + "x" + std::to_string(want_cols) +
                                 " matrix, got " + std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()));
        interp.generators.emplace(name, std::move(m));
    }
    return interp;
}

RelInterp parse_rel(const json& j, const dsl::Signature& sig) {
    RelInterp interp;
    interp.objects = parse_objects<int>(j.at("objects"), sig, read_size);
    const json& gens = j.at("generators");
    require_generators_cover(gens, sig);
    for (const auto& [name, decl] : sig.generators) {
        rel::BoolRelation r = relation_from_json(gens.at(name));
        int want_src = product_dim(decl.dom, interp.objects);
        int want_dst = product_dim(decl.cod, interp.objects);
        if (r.src_size() != want_src || r.dst_size() != want_dst)
            throw dsl::TypeError("generator '" + name + "' should be a relation from " +
                                 std::to_string(want_src) + " to " + std::to_string(want_dst) +
                                 ", got " + std::to_string(r.src_size()) + " to " +
                                 std::to_string(r.dst_size()));
        interp.generators.emplace(name, std::move(r));
    }
    return interp;
}

FinSetInterp parse_finset(const json& j, const dsl::Signature& sig) {
    FinSetInterp interp;
    interp.objects = parse_objects<finset::FiniteSet>(j.at("objects"), sig, set_from_json);

    finset::FinSetBackend backend;
    auto object_of = [&](const std::vector<std::string>& names) {
        if (names.empty()) return backend.unit_object();
        finset::FiniteSet acc = interp.objects.at(names[0]);
        for (std::size_t i = 1; i < names.size(); ++i)
            acc = backend.tensor_object(acc, interp.objects.at(names[i]));
        return acc;
    };

    const json& gens = j.at("generators");
    require_generators_cover(gens, sig);
    for (const auto& [name, decl] : sig.generators) {
        finset::FiniteSet dom = object_of(decl.dom);
        finset::FiniteSet cod = object_of(decl.cod);
        try {
            interp.generators.emplace(name, function_from_json(gens.at(name), dom, cod));
        } catch (const std::invalid_argument& e) {
            throw dsl::TypeError("generator '" + name + "': " + e.what());
        } catch (const IoError& e) {
            throw dsl::TypeError("generator '" + name + "': " + e.what());
        }
    }
    return interp;
}

} // namespace

Interpretation interpretation_from_json(const json& j, const dsl::Signature& sig) {
    if (!j.is_object() || !j.contains("backend"))
        throw IoError("interpretation must be {\"backend\", \"objects\", \"generators\"}");
    if (!j.contains("objects") || !j.contains("generators"))
        throw IoError("interpretation must be {\"backend\", \"objects\", \"generators\"}");
    std::string backend = j["backend"].get<std::string>();
    if (backend == "finhilb") return parse_finhilb(j, sig);
    if (backend == "rel") return parse_rel(j, sig);
    if (backend == "finset") return parse_finset(j, sig);
    throw IoError("unknown backend '" + backend + "' (expected finhilb, rel or finset)");
}

} // namespace catkit::io
