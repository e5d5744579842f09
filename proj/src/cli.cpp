#include "pedlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "pedlab/errors.hpp"
#include "pedlab/json_io.hpp"
#include "pedlab/pedestal.hpp"
#include "pedlab/rsk.hpp"
#include "pedlab/specmat.hpp"
#include "pedlab/tableaux.hpp"
#include "pedlab/verify.hpp"

namespace pedlab {

namespace {

struct Options {
    std::string shape_text;
    std::string poset_path;
    std::string filter_name;
    std::string format = "json";
    int series_degree = 12;
    int max_cells = 6;
    int max_extensions = 24;
    std::uint64_t seed = 1;

    bool has_shape() const { return !shape_text.empty(); }
    bool has_poset() const { return !poset_path.empty(); }
    bool text() const { return format == "text"; }
};

SkewShape target_shape(const Options& o) {
    if (!o.has_shape()) throw ParseError("this command needs --shape");
    return SkewShape::parse(o.shape_text);
}

std::pair<Poset, Filter> load_poset_file(const std::string& path) {
    if (std::filesystem::is_directory(path))
        throw ParseError("poset path is a directory; only verify accepts one: " + path);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open poset file: " + path);
    return poset_from_json(ordered_json::parse(in));
}

/// Poset plus filter for verbs accepting either target kind. Shapes carry the
/// row filter unless --filter trivial is given; poset files carry their
/// embedded filter.
std::pair<Poset, Filter> target_poset(const Options& o) {
    if (o.has_shape()) {
        SkewShape s = target_shape(o);
        Poset p = Poset::from_skew_shape(s);
        Filter f = o.filter_name == "trivial" || s.num_cells() == 0 ? trivial_filter(p) : row_filter(s);
        return {std::move(p), std::move(f)};
    }
    if (!o.has_poset()) throw ParseError("this command needs --shape or --poset");
    auto pf = load_poset_file(o.poset_path);
    if (o.filter_name == "trivial") pf.second = trivial_filter(pf.first);
    if (o.filter_name == "row") throw ParseError("the row filter applies only to --shape targets");
    return pf;
}

void render_rows(std::ostream& out, const SkewShape& s, const std::vector<std::string>& by_cell) {
    size_t idx = 0;
    for (int j = 1; j <= s.outer().rows(); ++j) {
        std::string line;
        for (int i = 1; i <= s.outer().part(j); ++i) {
            if (!line.empty()) line += ' ';
            if (i <= s.inner().part(j))
                line += '.';
            else
                line += by_cell[idx++];
        }
        out << line << "\n";
    }
}

void render_tableau(std::ostream& out, const StandardTableau& t) {
    std::vector<std::string> cells;
    for (int e : t.entries) cells.push_back(std::to_string(e));
    render_rows(out, t.shape, cells);
}

void render_tableau(std::ostream& out, const SemistandardTableau& t) {
    std::vector<std::string> cells;
    for (long long e : t.entries) cells.push_back(std::to_string(e));
    render_rows(out, t.shape, cells);
}

std::string ranks_text(const LinearExtension& e) {
    std::string s = "[";
    for (size_t i = 0; i < e.rank.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e.rank[i]);
    }
    return s + "]";
}

std::string counts_text(const std::vector<long long>& c) {
    std::vector<mpz_class> v;
    for (long long x : c) v.emplace_back(static_cast<long>(x));
    return IntPoly(std::move(v)).to_text() + " + O(q^" + std::to_string(c.size()) + ")";
}

ordered_json counts_json(const std::vector<long long>& c) {
    ordered_json j;
    j["coeffs"] = c;
    return j;
}

int cmd_syt(const Options& o, const std::string& form, std::ostream& out) {
    if (o.has_poset()) {
        auto [poset, filter] = target_poset(o);
        std::vector<LinearExtension> exts = linear_extensions(poset);
        if (form == "count") {
            out << exts.size() << "\n";
            return 0;
        }
        if (o.text()) {
            out << "count " << exts.size() << "\n";
            for (const LinearExtension& e : exts) out << ranks_text(e) << "\n";
            return 0;
        }
        ordered_json j;
        j["count"] = exts.size();
        ordered_json arr = ordered_json::array();
        for (const LinearExtension& e : exts) arr.push_back(to_json(e));
        j["extensions"] = std::move(arr);
        out << j.dump() << "\n";
        return 0;
    }
    SkewShape s = target_shape(o);
    std::vector<StandardTableau> tabs = enumerate_syt(s);
    if (form == "count") {
        out << tabs.size() << "\n";
        return 0;
    }
    if (o.text()) {
        out << "count " << tabs.size() << "\n";
        for (const StandardTableau& t : tabs) {
            out << "\n";
            render_tableau(out, t);
        }
        return 0;
    }
    ordered_json j;
    j["count"] = tabs.size();
    ordered_json arr = ordered_json::array();
    for (const StandardTableau& t : tabs) arr.push_back(to_json(t));
    j["tableaux"] = std::move(arr);
    out << j.dump() << "\n";
    return 0;
}

int cmd_gf(const Options& o, const std::string& form, std::ostream& out) {
    if (form == "plinth" || form == "maj") {
        SkewShape s = target_shape(o);
        IntPoly p = form == "plinth" ? plinth_polynomial(s) : maj_polynomial(s);
        if (o.text())
            out << p.to_text() << "\n";
        else
            out << to_json(p).dump() << "\n";
        return 0;
    }
    if (form == "pedestal") {
        auto [poset, filter] = target_poset(o);
        IntPoly p = pedestal_polynomial(poset, linear_extensions(poset)[0]);
        if (o.text())
            out << p.to_text() << "\n";
        else
            out << to_json(p).dump() << "\n";
        return 0;
    }
    std::vector<long long> counts;
    if (form == "ssyt") {
        counts = ssyt_counts(target_shape(o), o.series_degree);
    } else {
        auto [poset, filter] = target_poset(o);
        counts = form == "xpart" ? x_partition_counts(poset, o.series_degree)
                                 : semistandard_counts(poset, filter, o.series_degree);
    }
    if (o.text())
        out << counts_text(counts) << "\n";
    else
        out << counts_json(counts).dump() << "\n";
    return 0;
}

int cmd_plinth(const Options& o, std::ostream& out) {
    SkewShape s = target_shape(o);
    std::vector<StandardTableau> tabs = enumerate_syt(s);
    if (o.text()) {
        out << "count " << tabs.size() << "\n";
        for (const StandardTableau& t : tabs) {
            DescentData d = descent_data(t);
            SemistandardTableau pl = plinth(t);
            out << "\ntableau\n";
            render_tableau(out, t);
            out << "descents [";
            for (size_t i = 0; i < d.descent_contents.size(); ++i)
                out << (i ? "," : "") << d.descent_contents[i];
            out << "] maj " << d.maj << "\nplinth (volume " << pl.volume() << ")\n";
            render_tableau(out, pl);
        }
        return 0;
    }
    ordered_json j;
    j["shape"] = to_json(s);
    j["count"] = tabs.size();
    ordered_json arr = ordered_json::array();
    for (const StandardTableau& t : tabs) {
        DescentData d = descent_data(t);
        SemistandardTableau pl = plinth(t);
        ordered_json e;
        e["tableau"] = to_json(t);
        e["descents"] = d.descent_contents;
        e["maj"] = d.maj;
        e["plinth"] = to_json(pl);
        e["volume"] = pl.volume();
        arr.push_back(std::move(e));
    }
    j["tableaux"] = std::move(arr);
    out << j.dump() << "\n";
    return 0;
}

int cmd_pedestal(const Options& o, std::ostream& out) {
    auto [poset, filter] = target_poset(o);
    std::vector<LinearExtension> exts = linear_extensions(poset);
    const LinearExtension& ref = exts[0];
    if (o.text()) {
        out << "reference " << ranks_text(ref) << "\n";
        for (const LinearExtension& q : exts) {
            AscentData a = ascent_data(poset, ref, q);
            Pedestal ped = pedestal(poset, ref, q);
            out << ranks_text(q) << " ascents [";
            for (size_t i = 0; i < a.ascent_contents.size(); ++i)
                out << (i ? "," : "") << a.ascent_contents[i];
            out << "] volume " << ped.base.volume() << "\n";
        }
        return 0;
    }
    ordered_json j;
    j["poset"] = to_json(poset);
    j["reference"] = to_json(ref);
    j["count"] = exts.size();
    ordered_json arr = ordered_json::array();
    for (const LinearExtension& q : exts) {
        AscentData a = ascent_data(poset, ref, q);
        Pedestal ped = pedestal(poset, ref, q);
        ordered_json e;
        e["ranks"] = to_json(q);
        e["ascents"] = a.ascent_contents;
        e["values"] = to_json(poset, ped.base)["values"];
        e["volume"] = ped.base.volume();
        arr.push_back(std::move(e));
    }
    j["extensions"] = std::move(arr);
    out << j.dump() << "\n";
    return 0;
}

int cmd_matrix(const Options& o, std::ostream& out) {
    auto [poset, filter] = target_poset(o);
    PedestalMatrix m = pedestal_matrix(poset);
    if (o.text()) {
        out << "extensions\n";
        for (int i = 0; i < m.dim; ++i)
            out << "  " << i + 1 << ": " << ranks_text(m.extension_index[i]) << "\n";
        out << "entries (q exponents)\n";
        for (int r = 0; r < m.dim; ++r) {
            std::string line = "  ";
            for (int c = 0; c < m.dim; ++c) {
                if (c) line += ' ';
                line += std::to_string(m.entries[r][c].degree());
            }
            out << line << "\n";
        }
        return 0;
    }
    out << to_json(m).dump() << "\n";
    return 0;
}

int cmd_eigen(const Options& o, std::ostream& out) {
    auto [poset, filter] = target_poset(o);
    PedestalMatrix m = pedestal_matrix(poset);
    CharPoly cp = char_poly(m);
    EigenResult eig = eigen_polynomials(m);
    if (o.text()) {
        out << "dim " << m.dim << "\n";
        for (const IntPoly& e : eig.eigenvalues) {
            std::string f = factored_display(e);
            out << "eigenvalue " << (f.empty() ? e.to_text() : f) << "\n";
        }
        out << (eig.certified ? "certified" : "not certified") << "\n";
        return eig.certified ? 0 : 1;
    }
    ordered_json j;
    j["dim"] = m.dim;
    ordered_json cj = ordered_json::array();
    for (const IntPoly& c : cp.coeffs_in_lambda) cj.push_back(to_json(c));
    j["char_poly"] = std::move(cj);
    ordered_json ev = ordered_json::array();
    for (const IntPoly& e : eig.eigenvalues) {
        ordered_json one = to_json(e);
        std::string f = factored_display(e);
        if (!f.empty()) one["display"] = f;
        ev.push_back(std::move(one));
    }
    j["eigenvalues"] = std::move(ev);
    j["certified"] = eig.certified;
    out << j.dump() << "\n";
    return eig.certified ? 0 : 1;
}

Permutation parse_perm(const std::string& text) {
    std::vector<int> word;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) {
                word.push_back(std::stoi(cur));
                cur.clear();
            }
        } else {
            cur.push_back(ch);
        }
    }
    return Permutation(std::move(word));
}

int cmd_rsk(const Options& o, const std::string& perm_text, std::ostream& out) {
    if (!perm_text.empty()) {
        Permutation sigma = parse_perm(perm_text);
        auto [p, q] = rsk(sigma);
        if (o.text()) {
            out << "insertion\n";
            render_tableau(out, p);
            out << "recording\n";
            render_tableau(out, q);
            return 0;
        }
        ordered_json j;
        j["perm"] = to_json(sigma);
        j["insertion"] = to_json(p);
        j["recording"] = to_json(q);
        out << j.dump() << "\n";
        return 0;
    }
    SkewShape s = target_shape(o);
    std::vector<StandardTableau> tabs = enumerate_syt(s);
    if (o.text()) {
        for (const StandardTableau& t : tabs) {
            out << "tableau\n";
            render_tableau(out, t);
            out << "image\n";
            render_tableau(out, schuetzenberger(t));
            out << "\n";
        }
        return 0;
    }
    ordered_json j;
    j["shape"] = to_json(s);
    ordered_json arr = ordered_json::array();
    for (const StandardTableau& t : tabs) {
        ordered_json e;
        e["tableau"] = to_json(t);
        e["image"] = to_json(schuetzenberger(t));
        arr.push_back(std::move(e));
    }
    j["pairs"] = std::move(arr);
    out << j.dump() << "\n";
    return 0;
}

int cmd_verify(const Options& o, const std::string& suite, std::ostream& out) {
    Bounds bounds{o.max_cells, o.series_degree, o.max_extensions, o.seed};
    VerificationReport report;
    if (o.has_shape()) {
        Target t;
        t.shape = target_shape(o);
        report = run_suite(suite, bounds, &t);
    } else if (o.has_poset() && std::filesystem::is_directory(o.poset_path)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(o.poset_path))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        report.suite = suite;
        for (const auto& f : files) {
            Target t;
            t.poset = load_poset_file(f.string());
            VerificationReport one = run_suite(suite, bounds, &t);
            report.cases_run += one.cases_run;
            for (Failure& fail : one.failures) {
                fail.case_id = f.filename().string() + " " + fail.case_id;
                report.failures.push_back(std::move(fail));
            }
            for (std::string& note : one.notes)
                report.notes.push_back(f.filename().string() + ": " + note);
            report.elapsed_seconds += one.elapsed_seconds;
        }
    } else if (o.has_poset()) {
        Target t;
        t.poset = load_poset_file(o.poset_path);
        report = run_suite(suite, bounds, &t);
    } else {
        report = run_suite(suite, bounds);
    }
    if (o.text()) {
        out << "suite " << report.suite << ": " << report.cases_run << " cases, "
            << report.failures.size() << " failures\n";
        for (const Failure& f : report.failures)
            out << "FAIL " << f.case_id << "\n  expected: " << f.expected
                << "\n  actual:   " << f.actual << "\n";
        for (const std::string& n : report.notes) out << n << "\n";
    } else {
        ordered_json j;
        j["suite"] = report.suite;
        j["cases_run"] = report.cases_run;
        ordered_json fj = ordered_json::array();
        for (const Failure& f : report.failures) {
            ordered_json one;
            one["case"] = f.case_id;
            one["expected"] = f.expected;
            one["actual"] = f.actual;
            fj.push_back(std::move(one));
        }
        j["failures"] = std::move(fj);
        if (!report.notes.empty()) j["notes"] = report.notes;
        out << j.dump() << "\n";
    }
    return report.passed() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"exact pedestal statistics over tableaux and posets", "pedestal-lab"};
    app.require_subcommand(1);
    auto* shape_opt = app.add_option("--shape", o.shape_text, "shape text, e.g. 3,2 or 3,2/1");
    auto* poset_opt =
        app.add_option("--poset", o.poset_path, "poset JSON file; verify also accepts a directory");
    shape_opt->excludes(poset_opt);
    app.add_option("--filter", o.filter_name, "floor assignment: row or trivial")
        ->check(CLI::IsMember({"row", "trivial"}));
    app.add_option("--series-degree", o.series_degree, "series truncation degree (default 12)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--max-cells", o.max_cells, "corpus size cap (default 6)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--max-extensions", o.max_extensions,
                   "extension count cap for the eigen suite (default 24)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", o.seed, "seed for the random poset corpus (default 1)");
    app.add_option("--format", o.format, "json or text (default json)")
        ->check(CLI::IsMember({"json", "text"}));

    std::string syt_form = "count";
    auto* syt = app.add_subcommand("syt", "standard tableaux or linear extensions");
    syt->fallthrough();
    syt->add_option("form", syt_form, "count or list")->check(CLI::IsMember({"count", "list"}));

    std::string gf_form;
    auto* gf = app.add_subcommand("gf", "generating functions");
    gf->fallthrough();
    gf->add_option("form", gf_form, "plinth, maj, pedestal, ssyt, xpart, or semistandard")
        ->required()
        ->check(CLI::IsMember({"plinth", "maj", "pedestal", "ssyt", "xpart", "semistandard"}));

    auto* plinth_cmd = app.add_subcommand("plinth", "descent sets and plinths per standard tableau");
    plinth_cmd->fallthrough();
    auto* pedestal_cmd =
        app.add_subcommand("pedestal", "ascent sets and pedestals per linear extension");
    pedestal_cmd->fallthrough();
    auto* matrix_cmd = app.add_subcommand("matrix", "pedestal matrix over the linear extensions");
    matrix_cmd->fallthrough();
    auto* eigen_cmd =
        app.add_subcommand("eigen", "characteristic polynomial and polynomial eigenvalues");
    eigen_cmd->fallthrough();

    std::string perm_text;
    auto* rsk_cmd = app.add_subcommand("rsk", "row insertion and the shape-preserving involution");
    rsk_cmd->fallthrough();
    rsk_cmd->add_option("--perm", perm_text, "permutation in one-line notation, e.g. 2,3,1");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->fallthrough();
    verify_cmd->add_option("suite", suite,
                           "stanley, equidistribution, mahonian-row-filter, schuetzenberger, "
                           "pedestal-independence, bijections, or eigen")
        ->required();

    std::vector<const char*> argv;
    argv.push_back("pedestal-lab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*syt) return cmd_syt(o, syt_form, out);
        if (*gf) return cmd_gf(o, gf_form, out);
        if (*plinth_cmd) return cmd_plinth(o, out);
        if (*pedestal_cmd) return cmd_pedestal(o, out);
        if (*matrix_cmd) return cmd_matrix(o, out);
        if (*eigen_cmd) return cmd_eigen(o, out);
        if (*rsk_cmd) return cmd_rsk(o, perm_text, out);
        if (*verify_cmd) return cmd_verify(o, suite, out);
    } catch (const EigenExtractionFailed& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalInvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const NotDivisible& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const NonIntegerCoefficients& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace pedlab
