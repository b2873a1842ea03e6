#include "hopfg/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hopfg/errors.hpp"
#include "hopfg/rational.hpp"

namespace hopfg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing key \"" + key + "\"");
    return *it;
}

long int_field(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<long>();
}

/*
 * A scalar is an integer, a string "p/q", or a sum of root-of-unity terms
 * written as [[k, "p/q"], ...] meaning sum (p/q) zeta_N^k. Floating point
 * input is rejected to keep everything exact.
 */
CycNumber scalar_field(const json& v, long N, const std::string& where) {
    if (v.is_number_integer()) return CycNumber(v.get<long>(), N);
    if (v.is_string()) return CycNumber(parse_rational(v.get<std::string>()), N);
    if (v.is_array()) {
        CycNumber acc = CycNumber::zero(N);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const json& term = v[i];
            const std::string twhere = where + "[" + std::to_string(i) + "]";
            if (!term.is_array() || term.size() != 2) fail(twhere, "expected [power, coefficient]");
            long k = int_field(term[0], twhere);
            CycNumber coeff = term[1].is_number_integer()
                                  ? CycNumber(term[1].get<long>(), N)
                                  : (term[1].is_string()
                                         ? CycNumber(parse_rational(term[1].get<std::string>()), N)
                                         : (fail(twhere, "coefficient must be integer or string"),
                                            CycNumber()));
            acc += coeff * CycNumber::root_of_unity(N, k);
        }
        return acc;
    }
    fail(where, "expected integer, \"p/q\" string, or [[power, coeff], ...]");
}

Vec vec_field(const json& v, int dim, long N, const std::string& where) {
    if (!v.is_array() || (int)v.size() != dim)
        fail(where, "expected a vector of length " + std::to_string(dim));
    Vec out = zero_vec(dim, N);
    for (int i = 0; i < dim; ++i)
        out[i] = scalar_field(v[i], N, where + "[" + std::to_string(i) + "]");
    return out;
}

SparseMatrix matrix_field(const json& v, int rows, int cols, long N, const std::string& where) {
    if (!v.is_array() || (int)v.size() != rows)
        fail(where, "expected a matrix with " + std::to_string(rows) + " rows");
    SparseMatrix m(rows, cols, N);
    for (int i = 0; i < rows; ++i) {
        const json& row = v[i];
        const std::string rwhere = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || (int)row.size() != cols)
            fail(rwhere, "expected a row of length " + std::to_string(cols));
        for (int j = 0; j < cols; ++j) {
            CycNumber c = scalar_field(row[j], N, rwhere + "[" + std::to_string(j) + "]");
            if (!c.is_zero()) m.set(i, j, c);
        }
    }
    return m;
}

}  // namespace

Grade JsonHopfFamily::compose(const Grade& a, const Grade& b) const {
    return Grade::of_index(mul_[idx(a)][idx(b)]);
}

Grade JsonHopfFamily::inverse(const Grade& a) const { return Grade::of_index(inv_[idx(a)]); }

std::string JsonHopfFamily::describe() const {
    return "structure-constant family over a group of order " +
           std::to_string(elements_.size()) + ", scalars in Q(zeta_" + std::to_string(N_) + ")";
}

const std::string& JsonHopfFamily::grade_label(const Grade& g) const { return elements_[idx(g)]; }

std::vector<Grade> JsonHopfFamily::all_grades() const {
    std::vector<Grade> out;
    for (int i = 0; i < (int)elements_.size(); ++i) out.push_back(Grade::of_index(i));
    return out;
}

int JsonHopfFamily::idx(const Grade& g) const {
    long i = g.index();
    if (i < 0 || i >= (long)elements_.size())
        throw GradeMismatch("grade index " + std::to_string(i) + " outside the loaded group");
    return (int)i;
}

GradedAlgebra JsonHopfFamily::build_algebra(const Grade& a) const { return algebras_[idx(a)]; }

SparseMatrix JsonHopfFamily::build_coproduct(const Grade& a, const Grade& b) const {
    return coproducts_[idx(a)][idx(b)];
}

Vec JsonHopfFamily::build_counit() const { return counit_; }

SparseMatrix JsonHopfFamily::build_antipode(const Grade& a) const { return antipodes_[idx(a)]; }

Vec JsonHopfFamily::build_pivot(const Grade& a) const { return pivots_[idx(a)]; }

std::unique_ptr<JsonHopfFamily> parse_family_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("top level", "expected an object");

    auto out = std::make_unique<JsonHopfFamily>();
    JsonHopfFamily& F = *out;

    // group table
    const json& group = member(root, "group", "top level");
    const json& elements = member(group, "elements", "group");
    if (!elements.is_array() || elements.empty()) fail("group.elements", "expected a nonempty array");
    for (const auto& e : elements) {
        if (!e.is_string()) fail("group.elements", "labels must be strings");
        F.elements_.push_back(e.get<std::string>());
    }
    const int n = (int)F.elements_.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (F.elements_[i] == F.elements_[j]) fail("group.elements", "duplicate label");

    const json& mul = member(group, "mul_table", "group");
    if (!mul.is_array() || (int)mul.size() != n) fail("group.mul_table", "expected n rows");
    for (int i = 0; i < n; ++i) {
        if (!mul[i].is_array() || (int)mul[i].size() != n)
            fail("group.mul_table", "expected n columns per row");
        std::vector<int> row;
        for (int j = 0; j < n; ++j) {
            long v = int_field(mul[i][j], "group.mul_table");
            if (v < 0 || v >= n) fail("group.mul_table", "entry out of range");
            row.push_back((int)v);
        }
        F.mul_.push_back(row);
    }
    long u = int_field(member(group, "unit", "group"), "group.unit");
    if (u < 0 || u >= n) fail("group.unit", "out of range");
    F.unit_ = (int)u;
    const json& inv = member(group, "inv", "group");
    if (!inv.is_array() || (int)inv.size() != n) fail("group.inv", "expected n entries");
    for (int i = 0; i < n; ++i) {
        long v = int_field(inv[i], "group.inv");
        if (v < 0 || v >= n) fail("group.inv", "entry out of range");
        F.inv_.push_back((int)v);
    }
    // the table must actually be a group
    for (int i = 0; i < n; ++i) {
        if (F.mul_[F.unit_][i] != i || F.mul_[i][F.unit_] != i) fail("group", "unit law fails");
        if (F.mul_[i][F.inv_[i]] != F.unit_ || F.mul_[F.inv_[i]][i] != F.unit_)
            fail("group", "inverse law fails");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (F.mul_[F.mul_[i][j]][k] != F.mul_[i][F.mul_[j][k]])
                    fail("group.mul_table", "not associative");

    long N = int_field(member(root, "scalar_modulus", "top level"), "scalar_modulus");
    if (N < 1) fail("scalar_modulus", "must be a positive integer");
    F.N_ = N;

    // graded algebras, keyed by element label
    const json& algs = member(root, "algebras", "top level");
    for (int g = 0; g < n; ++g) {
        const std::string& label = F.elements_[g];
        const std::string where = "algebras." + label;
        const json& a = member(algs, label, "algebras");
        GradedAlgebra A;
        A.N = N;
        long dim = int_field(member(a, "dim", where), where + ".dim");
        if (dim < 1) fail(where + ".dim", "must be positive");
        A.dim = (int)dim;
        A.unit = vec_field(member(a, "unit", where), A.dim, N, where + ".unit");
        if (a.contains("labels")) {
            const json& lab = a["labels"];
            if (!lab.is_array() || (int)lab.size() != A.dim)
                fail(where + ".labels", "expected one label per basis vector");
            for (const auto& s : lab) {
                if (!s.is_string()) fail(where + ".labels", "labels must be strings");
                A.labels.push_back(s.get<std::string>());
            }
        }
        if (a.contains("generators")) {
            const json& gen = a["generators"];
            if (!gen.is_array()) fail(where + ".generators", "expected an array of indices");
            for (const auto& v : gen) {
                long i = int_field(v, where + ".generators");
                if (i < 0 || i >= A.dim) fail(where + ".generators", "index out of range");
                A.generators.push_back((int)i);
            }
        }
        const json& mm = member(a, "mul", where);
        if (!mm.is_array()) fail(where + ".mul", "expected an array of [i, j, k, coeff]");
        std::vector<std::map<int, CycNumber>> acc((std::size_t)A.dim * A.dim);
        for (std::size_t t = 0; t < mm.size(); ++t) {
            const json& quad = mm[t];
            const std::string qwhere = where + ".mul[" + std::to_string(t) + "]";
            if (!quad.is_array() || quad.size() != 4) fail(qwhere, "expected [i, j, k, coeff]");
            long i = int_field(quad[0], qwhere), j = int_field(quad[1], qwhere),
                 k = int_field(quad[2], qwhere);
            if (i < 0 || i >= A.dim || j < 0 || j >= A.dim || k < 0 || k >= A.dim)
                fail(qwhere, "basis index out of range");
            CycNumber c = scalar_field(quad[3], N, qwhere);
            auto& cell = acc[(std::size_t)i * A.dim + j];
            auto it = cell.find((int)k);
            if (it == cell.end()) cell.emplace((int)k, c);
            else it->second += c;
        }
        for (auto& cell : acc) {
            SparseVec sv;
            for (const auto& [k, c] : cell)
                if (!c.is_zero()) sv.ent.emplace_back(k, c);
            A.mul.push_back(std::move(sv));
        }
        F.algebras_.push_back(std::move(A));
    }

    // coproducts for every ordered pair, keyed "labelA,labelB"
    const json& cop = member(root, "coproduct", "top level");
    F.coproducts_.assign(n, std::vector<SparseMatrix>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const std::string key = F.elements_[a] + "," + F.elements_[b];
            const json& m = member(cop, key, "coproduct");
            int rows = F.algebras_[a].dim * F.algebras_[b].dim;
            int cols = F.algebras_[F.mul_[a][b]].dim;
            F.coproducts_[a][b] = matrix_field(m, rows, cols, N, "coproduct." + key);
        }

    F.counit_ = vec_field(member(root, "counit", "top level"), F.algebras_[F.unit_].dim, N,
                          "counit");

    const json& anti = member(root, "antipode", "top level");
    for (int a = 0; a < n; ++a) {
        const std::string& label = F.elements_[a];
        F.antipodes_.push_back(matrix_field(member(anti, label, "antipode"),
                                            F.algebras_[F.inv_[a]].dim, F.algebras_[a].dim, N,
                                            "antipode." + label));
    }

    const json& piv = member(root, "pivot", "top level");
    for (int a = 0; a < n; ++a) {
        const std::string& label = F.elements_[a];
        F.pivots_.push_back(
            vec_field(member(piv, label, "pivot"), F.algebras_[a].dim, N, "pivot." + label));
    }

    return out;
}

std::unique_ptr<JsonHopfFamily> load_family_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family_json(buf.str());
}

}  // namespace hopfg
