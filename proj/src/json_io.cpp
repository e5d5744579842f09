#include "pedlab/json_io.hpp"

#include <limits>

#include "pedlab/errors.hpp"

namespace pedlab {

namespace {

ordered_json coeff_to_json(const mpz_class& c) {
    if (c.fits_slong_p()) return static_cast<long long>(c.get_si());
    return c.get_str();
}

ordered_json coeff_list(const std::vector<mpz_class>& coeffs) {
    ordered_json arr = ordered_json::array();
    for (const mpz_class& c : coeffs) arr.push_back(coeff_to_json(c));
    return arr;
}

ordered_json partition_json(const Partition& p) {
    ordered_json arr = ordered_json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

template <typename Entry>
ordered_json tableau_rows(const SkewShape& shape, const std::vector<Entry>& entries) {
    ordered_json rows = ordered_json::array();
    const std::vector<Cell> cells = shape.cells();
    for (int j = 1; j <= shape.outer().rows(); ++j) {
        ordered_json row = ordered_json::array();
        for (int i = 1; i <= shape.inner().part(j); ++i) row.push_back(nullptr);
        for (size_t c = 0; c < cells.size(); ++c)
            if (cells[c].j == j) row.push_back(entries[c]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ordered_json to_json(const IntPoly& p) {
    ordered_json j;
    j["coeffs"] = coeff_list(p.coeffs());
    return j;
}

ordered_json to_json(const TruncatedSeries& s) {
    ordered_json j;
    j["coeffs"] = coeff_list(s.coeffs());
    return j;
}

ordered_json to_json(const SkewShape& s) {
    ordered_json j;
    j["outer"] = partition_json(s.outer());
    j["inner"] = partition_json(s.inner());
    return j;
}

ordered_json to_json(const StandardTableau& t) {
    ordered_json j;
    j["shape"] = to_json(t.shape);
    j["rows"] = tableau_rows(t.shape, t.entries);
    return j;
}

ordered_json to_json(const SemistandardTableau& t) {
    ordered_json j;
    j["shape"] = to_json(t.shape);
    j["rows"] = tableau_rows(t.shape, t.entries);
    return j;
}

ordered_json to_json(const Poset& p) {
    ordered_json j;
    j["elements"] = p.labels();
    ordered_json covers = ordered_json::array();
    for (const auto& [a, b] : p.cover_pairs()) {
        ordered_json pair = ordered_json::array();
        pair.push_back(p.labels()[static_cast<size_t>(a)]);
        pair.push_back(p.labels()[static_cast<size_t>(b)]);
        covers.push_back(std::move(pair));
    }
    j["covers"] = std::move(covers);
    return j;
}

ordered_json to_json(const Poset& p, const Filter& f) {
    ordered_json j = to_json(p);
    ordered_json floors;
    for (int e = 0; e < p.size(); ++e)
        floors[p.labels()[static_cast<size_t>(e)]] = f.floor[static_cast<size_t>(e)];
    j["filter"] = std::move(floors);
    return j;
}

ordered_json to_json(const Poset& p, const XPartition& t) {
    ordered_json values;
    for (int e = 0; e < p.size(); ++e)
        values[p.labels()[static_cast<size_t>(e)]] = t.value[static_cast<size_t>(e)];
    ordered_json j;
    j["values"] = std::move(values);
    return j;
}

ordered_json to_json(const LinearExtension& e) {
    ordered_json arr = ordered_json::array();
    for (int r : e.rank) arr.push_back(r);
    return arr;
}

ordered_json to_json(const PedestalMatrix& m) {
    ordered_json j;
    j["dim"] = m.dim;
    ordered_json rows = ordered_json::array();
    for (const auto& row : m.entries) {
        ordered_json out_row = ordered_json::array();
        for (const IntPoly& e : row) out_row.push_back(to_json(e));
        rows.push_back(std::move(out_row));
    }
    j["entries"] = std::move(rows);
    ordered_json exts = ordered_json::array();
    for (const LinearExtension& e : m.extension_index) exts.push_back(to_json(e));
    j["extensions"] = std::move(exts);
    return j;
}

ordered_json to_json(const Permutation& s) {
    ordered_json arr = ordered_json::array();
    for (int v : s.word) arr.push_back(v);
    return arr;
}

std::pair<Poset, Filter> poset_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw ParseError("poset JSON needs an 'elements' array");
    std::vector<std::string> labels;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw ParseError("poset elements must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
        if (!j["covers"].is_array()) throw ParseError("'covers' must be an array of pairs");
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                throw ParseError("each cover must be a pair of element names");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    }
    Poset p = Poset::from_covers(labels, covers);
    Filter f = trivial_filter(p);
    if (j.contains("filter")) {
        if (!j["filter"].is_object()) throw ParseError("'filter' must be an object");
        f.floor.assign(static_cast<size_t>(p.size()), 0);
        int max_floor = 0;
        for (const auto& [label, floor] : j["filter"].items()) {
            if (!floor.is_number_integer()) throw ParseError("floors must be integers");
            const int v = floor.get<int>();
            if (v < 1) throw ParseError("floors must be at least 1");
            f.floor[static_cast<size_t>(p.index_of(label))] = v;
            max_floor = std::max(max_floor, v);
        }
        f.k = max_floor;
        for (int e = 0; e < p.size(); ++e)
            if (f.floor[static_cast<size_t>(e)] == 0)
                throw ParseError("filter misses element '" + p.labels()[static_cast<size_t>(e)] + "'");
        if (!filter_valid(p, f)) throw ParseError("filter is not surjective order-respecting");
    }
    return {std::move(p), std::move(f)};
}

}  // namespace pedlab
