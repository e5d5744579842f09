#include "pedlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pedlab/corpus.hpp"
#include "pedlab/errors.hpp"
#include "pedlab/intpoly.hpp"
#include "pedlab/json_io.hpp"
#include "pedlab/pedestal.hpp"
#include "pedlab/rsk.hpp"
#include "pedlab/specmat.hpp"
#include "pedlab/tableaux.hpp"

namespace pedlab {

namespace {

constexpr size_t kMaxFailures = 50;
constexpr long long kBijectionVolume = 8;

struct SuiteCtx {
    VerificationReport report;

    bool full() const { return report.failures.size() >= kMaxFailures; }
    void fail(std::string id, std::string expected, std::string actual) {
        if (!full()) report.failures.push_back({std::move(id), std::move(expected), std::move(actual)});
    }
    void note(std::string s) { report.notes.push_back(std::move(s)); }
};

std::string fmt_counts(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

std::string fmt_ranks(const LinearExtension& e) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < e.rank.size(); ++i) {
        if (i) os << ',';
        os << e.rank[i];
    }
    os << ']';
    return os.str();
}

std::string shape_id(const SkewShape& s) {
    std::string t = s.to_text();
    return t.empty() ? "shape (empty)" : "shape " + t;
}

std::string poset_id(const std::string& name, const Poset& p) {
    return name + " " + to_json(p).dump();
}

std::vector<SkewShape> shape_cases(const Bounds& b, const Target* target, bool keep_empty) {
    if (target) {
        if (!target->shape) throw std::invalid_argument("this suite takes a --shape target");
        return {*target->shape};
    }
    std::vector<SkewShape> out = all_skew_shapes(b.max_cells);
    if (!keep_empty)
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const SkewShape& s) { return s.num_cells() == 0; }),
                  out.end());
    return out;
}

std::vector<NamedPoset> poset_cases(const Bounds& b, const Target* target, int max_elements) {
    std::vector<NamedPoset> out;
    if (target) {
        if (target->shape) {
            out.push_back({shape_id(*target->shape), Poset::from_skew_shape(*target->shape)});
        } else if (target->poset) {
            out.push_back({"poset", target->poset->first});
        } else {
            throw std::invalid_argument("this suite takes a --shape or --poset target");
        }
        return out;
    }
    for (const SkewShape& s : all_skew_shapes(max_elements)) {
        if (s.num_cells() == 0) continue;
        out.push_back({shape_id(s), Poset::from_skew_shape(s)});
    }
    for (NamedPoset& np : named_posets())
        if (np.poset.size() <= max_elements) out.push_back(std::move(np));
    for (NamedPoset& np : random_posets(b.seed, 50, max_elements)) out.push_back(std::move(np));
    return out;
}

/// Weakly increasing non-negative vectors of the given length with sum at
/// most budget.
template <typename F>
void gen_weights(int idx, int length, long long lo, long long left, std::vector<long long>& y,
                 F&& visit) {
    if (idx == length) {
        visit();
        return;
    }
    long long rest = length - idx;
    for (long long v = lo; v * rest <= left; ++v) {
        y.push_back(v);
        gen_weights(idx + 1, length, v, left - v, y, visit);
        y.pop_back();
    }
}

void run_stanley(SuiteCtx& c, const Bounds& b, const Target* target) {
    for (const SkewShape& s : shape_cases(b, target, true)) {
        if (c.full()) break;
        ++c.report.cases_run;
        std::vector<int> denom;
        for (int k = 1; k <= s.num_cells(); ++k) denom.push_back(k);
        TruncatedSeries lhs = series_rational(maj_polynomial(s), denom, b.series_degree);
        std::vector<long long> expected = ssyt_counts(s, b.series_degree);
        std::vector<long long> got;
        for (int i = 0; i <= b.series_degree; ++i) got.push_back(lhs.coeff(i).get_si());
        if (got != expected) c.fail(shape_id(s), fmt_counts(expected), fmt_counts(got));
    }
}

void run_equidistribution(SuiteCtx& c, const Bounds& b, const Target* target) {
    for (const SkewShape& s : shape_cases(b, target, true)) {
        if (c.full()) break;
        ++c.report.cases_run;
        std::vector<long long> majs, plinths;
        for (const StandardTableau& q : enumerate_syt(s)) {
            majs.push_back(descent_data(q).maj);
            plinths.push_back(plinth(q).volume());
        }
        std::sort(majs.begin(), majs.end());
        std::sort(plinths.begin(), plinths.end());
        if (majs != plinths)
            c.fail(shape_id(s), "maj multiset " + fmt_counts(majs),
                   "plinth volume multiset " + fmt_counts(plinths));
    }
}

/// The shifted pedestal statistic matches maj for straight shapes. For skew
/// shapes the match can fail (2,2/1 is the smallest case: subtracting the
/// minimal semistandard element does not stay inside the X-partitions), so
/// the default corpus is the straight shapes; explicit targets are checked
/// as given and reported honestly.
void run_mahonian_row_filter(SuiteCtx& c, const Bounds& b, const Target* target) {
    std::vector<SkewShape> shapes;
    if (target) {
        if (!target->shape) throw std::invalid_argument("this suite takes a --shape target");
        shapes.push_back(*target->shape);
    } else {
        for (const Partition& lam : all_partitions(b.max_cells))
            if (lam.total() > 0) shapes.emplace_back(lam, Partition());
    }
    for (const SkewShape& s : shapes) {
        if (c.full()) break;
        if (s.num_cells() == 0) throw std::invalid_argument("mahonian-row-filter needs a nonempty shape");
        ++c.report.cases_run;
        Poset poset = Poset::from_skew_shape(s);
        Filter f = row_filter(s);
        long long shift = minimal_semistandard(poset, f).volume();
        std::vector<long long> majs;
        for (const StandardTableau& q : enumerate_syt(s)) majs.push_back(descent_data(q).maj);
        std::sort(majs.begin(), majs.end());
        std::vector<LinearExtension> exts = linear_extensions(poset);
        for (const LinearExtension& p : exts) {
            std::vector<long long> stats;
            for (const LinearExtension& q : exts)
                stats.push_back(pedestal(poset, p, q).base.volume() + shift);
            std::sort(stats.begin(), stats.end());
            if (stats != majs) {
                c.fail(shape_id(s) + " reference " + fmt_ranks(p), "maj multiset " + fmt_counts(majs),
                       "shifted pedestal multiset " + fmt_counts(stats));
                if (c.full()) break;
            }
        }
    }
}

void run_schuetzenberger(SuiteCtx& c, const Bounds& b, const Target* target) {
    std::vector<SkewShape> shapes;
    if (target) {
        if (!target->shape) throw std::invalid_argument("this suite takes a --shape target");
        if (!target->shape->is_straight())
            throw std::invalid_argument("schuetzenberger needs a straight shape");
        shapes.push_back(*target->shape);
    } else {
        for (const Partition& lam : all_partitions(b.max_cells)) shapes.emplace_back(lam, Partition());
    }
    for (const SkewShape& s : shapes) {
        if (c.full()) break;
        ++c.report.cases_run;
        std::vector<StandardTableau> syts = enumerate_syt(s);
        for (const StandardTableau& q : syts) {
            StandardTableau image = schuetzenberger(q);
            long long maj = descent_data(q).maj;
            long long vol = plinth(image).volume();
            if (vol != maj)
                c.fail(shape_id(s) + " tableau " + fmt_counts({q.entries.begin(), q.entries.end()}),
                       "plinth volume " + std::to_string(maj), std::to_string(vol));
            if (!(schuetzenberger(image) == q))
                c.fail(shape_id(s) + " tableau " + fmt_counts({q.entries.begin(), q.entries.end()}),
                       "involution returns the tableau", "different tableau");
            for (const StandardTableau& aux : syts) {
                if (!(schuetzenberger(q, aux) == image)) {
                    c.fail(shape_id(s) + " tableau " + fmt_counts({q.entries.begin(), q.entries.end()}) +
                               " aux " + fmt_counts({aux.entries.begin(), aux.entries.end()}),
                           "image independent of auxiliary tableau", "differs");
                    break;
                }
            }
            if (c.full()) break;
        }
    }
}

void run_pedestal_independence(SuiteCtx& c, const Bounds& b, const Target* target) {
    for (const NamedPoset& np : poset_cases(b, target, b.max_cells)) {
        if (c.full()) break;
        ++c.report.cases_run;
        std::vector<LinearExtension> exts = linear_extensions(np.poset);
        IntPoly ref = pedestal_polynomial(np.poset, exts[0]);
        if (target) c.note("distribution " + ref.to_text());
        for (size_t i = 1; i < exts.size(); ++i) {
            IntPoly got = pedestal_polynomial(np.poset, exts[i]);
            if (!(got == ref)) {
                c.fail(poset_id(np.name, np.poset) + " reference " + fmt_ranks(exts[i]),
                       ref.to_text(), got.to_text());
                if (c.full()) break;
            }
        }
    }
}

void check_bss(SuiteCtx& c, const SkewShape& s) {
    ++c.report.cases_run;
    std::string id = shape_id(s);
    std::set<std::vector<long long>> expected;
    for (const SemistandardTableau& t : enumerate_ssyt(s, kBijectionVolume)) {
        expected.insert(t.entries);
        std::pair<StandardTableau, std::vector<long long>> qy;
        try {
            qy = bss_inverse(t);
        } catch (const Error& e) {
            c.fail(id + " tableau " + fmt_counts(t.entries), "inverse succeeds", e.what());
            continue;
        }
        long long ysum = 0;
        for (long long v : qy.second) ysum += v;
        if (plinth(qy.first).volume() + ysum != t.volume())
            c.fail(id + " tableau " + fmt_counts(t.entries), "volume " + std::to_string(t.volume()),
                   std::to_string(plinth(qy.first).volume() + ysum));
        if (!(bss_forward(qy.first, qy.second) == t))
            c.fail(id + " tableau " + fmt_counts(t.entries), "round trip returns the tableau",
                   "differs");
    }
    std::set<std::vector<long long>> seen;
    std::vector<long long> y;
    for (const StandardTableau& q : enumerate_syt(s)) {
        long long base = plinth(q).volume();
        if (base > kBijectionVolume) continue;
        gen_weights(0, q.size(), 0, kBijectionVolume - base, y, [&] {
            SemistandardTableau t = bss_forward(q, y);
            if (!seen.insert(t.entries).second)
                c.fail(id + " tableau " + fmt_counts(t.entries), "one preimage", "two preimages");
        });
    }
    if (seen != expected)
        c.fail(id, std::to_string(expected.size()) + " tableaux reached",
               std::to_string(seen.size()) + " reached or wrong set");
}

void check_bst(SuiteCtx& c, const NamedPoset& np) {
    ++c.report.cases_run;
    std::string id = poset_id(np.name, np.poset);
    const Poset& poset = np.poset;
    std::vector<LinearExtension> exts = linear_extensions(poset);
    std::set<std::vector<long long>> expected;
    for (const XPartition& t : enumerate_semistandard(poset, trivial_filter(poset), kBijectionVolume))
        expected.insert(t.value);
    std::vector<long long> y;
    for (const LinearExtension& p : exts) {
        if (c.full()) break;
        std::string pid = id + " reference " + fmt_ranks(p);
        for (const std::vector<long long>& values : expected) {
            XPartition t{values};
            std::pair<LinearExtension, std::vector<long long>> qy;
            try {
                qy = bst_inverse(poset, p, t);
            } catch (const Error& e) {
                c.fail(pid + " values " + fmt_counts(values), "inverse succeeds", e.what());
                continue;
            }
            long long ysum = 0;
            for (long long v : qy.second) ysum += v;
            if (pedestal(poset, p, qy.first).base.volume() + ysum != t.volume())
                c.fail(pid + " values " + fmt_counts(values), "volume " + std::to_string(t.volume()),
                       std::to_string(pedestal(poset, p, qy.first).base.volume() + ysum));
            if (!(bst_forward(poset, p, qy.first, qy.second) == t))
                c.fail(pid + " values " + fmt_counts(values), "round trip returns the values",
                       "differs");
        }
        std::set<std::vector<long long>> seen;
        for (const LinearExtension& q : exts) {
            long long base = pedestal(poset, p, q).base.volume();
            if (base > kBijectionVolume) continue;
            gen_weights(0, poset.size(), 0, kBijectionVolume - base, y, [&] {
                XPartition t = bst_forward(poset, p, q, y);
                if (!seen.insert(t.value).second)
                    c.fail(pid + " values " + fmt_counts(t.value), "one preimage", "two preimages");
            });
        }
        if (seen != expected)
            c.fail(pid, std::to_string(expected.size()) + " X-partitions reached",
                   std::to_string(seen.size()) + " reached or wrong set");
    }
}

void run_bijections(SuiteCtx& c, const Bounds& b, const Target* target) {
    if (target) {
        if (target->shape) {
            check_bss(c, *target->shape);
            if (target->shape->num_cells() > 0)
                check_bst(c, {shape_id(*target->shape), Poset::from_skew_shape(*target->shape)});
        } else if (target->poset) {
            check_bst(c, {"poset", target->poset->first});
        } else {
            throw std::invalid_argument("this suite takes a --shape or --poset target");
        }
        return;
    }
    for (const SkewShape& s : all_skew_shapes(b.max_cells)) {
        if (c.full()) break;
        check_bss(c, s);
    }
    for (const NamedPoset& np : poset_cases(b, nullptr, b.max_cells)) {
        if (c.full()) break;
        if (np.name.rfind("shape ", 0) == 0) continue;  // covered through check_bss shapes
        check_bst(c, np);
    }
    for (const SkewShape& s : all_skew_shapes(b.max_cells)) {
        if (c.full()) break;
        if (s.num_cells() == 0) continue;
        check_bst(c, {shape_id(s), Poset::from_skew_shape(s)});
    }
}

void run_eigen(SuiteCtx& c, const Bounds& b, const Target* target) {
    for (const NamedPoset& np : poset_cases(b, target, b.max_cells)) {
        if (c.full()) break;
        std::string id = poset_id(np.name, np.poset);
        std::vector<LinearExtension> exts = linear_extensions(np.poset);
        long long m = static_cast<long long>(exts.size());
        if (!target && m > b.max_extensions) continue;
        ++c.report.cases_run;
        PedestalMatrix mat = pedestal_matrix(np.poset);
        for (int r = 0; r < mat.dim; ++r)
            for (int col = 0; col < mat.dim; ++col) {
                mpz_class at0 = mat.entries[r][col].eval(0);
                if (at0 != (r == col ? 1 : 0))
                    c.fail(id, "identity matrix at q=0", "entry (" + std::to_string(r) + "," +
                                                             std::to_string(col) + ") is " +
                                                             at0.get_str());
                if (mat.entries[r][col].eval(1) != 1)
                    c.fail(id, "all-ones matrix at q=1", "entry (" + std::to_string(r) + "," +
                                                             std::to_string(col) + ") differs");
            }
        IntPoly row_sum;
        for (int col = 0; col < mat.dim; ++col) row_sum += mat.entries[0][col];
        for (int r = 1; r < mat.dim; ++r) {
            IntPoly other;
            for (int col = 0; col < mat.dim; ++col) other += mat.entries[r][col];
            if (!(other == row_sum)) {
                c.fail(id, "row sums all equal " + row_sum.to_text(),
                       "row " + std::to_string(r) + " sums to " + other.to_text());
                break;
            }
        }
        EigenResult eig;
        try {
            eig = eigen_polynomials(mat);
        } catch (const EigenExtractionFailed& e) {
            c.fail(id, "certified polynomial spectrum", e.what());
            continue;
        }
        if (!eig.certified) c.fail(id, "certified polynomial spectrum", "not certified");
        if (static_cast<long long>(eig.eigenvalues.size()) != m)
            c.fail(id, std::to_string(m) + " eigenvalues",
                   std::to_string(eig.eigenvalues.size()));
        IntPoly sum;
        int top_count = 0;
        bool top_is_row_sum = false;
        for (const IntPoly& e : eig.eigenvalues) {
            sum += e;
            if (e.eval(0) != 1)
                c.fail(id, "eigenvalue value 1 at q=0",
                       e.to_text() + " evaluates to " + e.eval(0).get_str());
            mpz_class at1 = e.eval(1);
            if (at1 == static_cast<long>(m)) {
                ++top_count;
                top_is_row_sum = (e == row_sum);
            } else if (at1 != 0) {
                c.fail(id, "eigenvalue value 0 or " + std::to_string(m) + " at q=1",
                       e.to_text() + " evaluates to " + at1.get_str());
            }
        }
        if (!(sum == IntPoly::constant(static_cast<long>(m))))
            c.fail(id, "eigenvalue sum " + std::to_string(m), sum.to_text());
        if (top_count != 1)
            c.fail(id, "exactly one eigenvalue reaching " + std::to_string(m) + " at q=1",
                   std::to_string(top_count));
        else if (!top_is_row_sum)
            c.fail(id, "top eigenvalue equals the row sum " + row_sum.to_text(), "differs");
        if (target) {
            for (const IntPoly& e : eig.eigenvalues) {
                std::string factored = factored_display(e);
                c.note("eigenvalue " + (factored.empty() ? e.to_text() : factored));
            }
        }
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "stanley",           "equidistribution", "mahonian-row-filter", "schuetzenberger",
        "pedestal-independence", "bijections",   "eigen"};
    return names;
}

VerificationReport run_suite(const std::string& name, const Bounds& bounds, const Target* target) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteCtx c;
    c.report.suite = name;
    if (name == "stanley")
        run_stanley(c, bounds, target);
    else if (name == "equidistribution")
        run_equidistribution(c, bounds, target);
    else if (name == "mahonian-row-filter")
        run_mahonian_row_filter(c, bounds, target);
    else if (name == "schuetzenberger")
        run_schuetzenberger(c, bounds, target);
    else if (name == "pedestal-independence")
        run_pedestal_independence(c, bounds, target);
    else if (name == "bijections")
        run_bijections(c, bounds, target);
    else if (name == "eigen")
        run_eigen(c, bounds, target);
    else
        throw UnknownSuite("unknown suite: " + name);
    c.report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.report;
}

}  // namespace pedlab
