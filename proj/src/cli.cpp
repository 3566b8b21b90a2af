#include "qwalk/cli.hpp"

#include "qwalk/errors.hpp"
#include "qwalk/residue.hpp"
#include "qwalk/simulator.hpp"
#include "qwalk/verify.hpp"
#include "qwalk/walk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace qwalk::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kDecimalDigits = 30;

struct Cell {
    int n = 2;
    int j = 1;
    std::string method;
    Rational p;
    // Simulation upper bound; p is then the lower bound.
    std::optional<Rational> p_upper;
    // Common denominator to print over, when requested.
    std::optional<BigInt> over;
};

std::string decimal_with_marker(const Rational& r) {
    bool exact = false;
    std::string s = r.decimal(kDecimalDigits, &exact);
    return exact ? s : "≈" + s;
}

std::pair<BigInt, BigInt> parts(const Rational& r, const std::optional<BigInt>& over) {
    if (!over) return {r.numerator(), r.denominator()};
    return {r.numerator() * (*over / r.denominator()), *over};
}

std::string frac(const Rational& r, const std::optional<BigInt>& over) {
    auto [num, den] = parts(r, over);
    return num.get_str() + "/" + den.get_str();
}

std::string cell_value(const Cell& c, const std::string& format) {
    if (format == "dec") {
        if (c.p_upper) return "[" + decimal_with_marker(c.p) + ", " + decimal_with_marker(*c.p_upper) + "]";
        return decimal_with_marker(c.p);
    }
    if (c.p_upper) return "[" + c.p.str() + ", " + c.p_upper->str() + "]";
    return c.over ? frac(c.p, c.over) : c.p.str();
}

Json cell_json(const Cell& c) {
    auto [num, den] = parts(c.p, c.over);
    Json j;
    j["n"] = c.n;
    j["j"] = c.j;
    j["p"] = {{"num", num.get_str()}, {"den", den.get_str()}};
    j["decimal"] = c.p.decimal(kDecimalDigits);
    j["method"] = c.method;
    if (c.p_upper) j["p_upper"] = {{"num", c.p_upper->numerator().get_str()}, {"den", c.p_upper->denominator().get_str()}};
    return j;
}

const char* kCsvHeader = "n,j,p_num,p_den,q_num,q_den,method";

std::string cell_csv(const Cell& c) {
    auto [pn, pd] = parts(c.p, c.over);
    auto [qn, qd] = parts(Rational(1) - c.p, c.over);
    return std::to_string(c.n) + "," + std::to_string(c.j) + "," + pn.get_str() + "," + pd.get_str() + "," +
           qn.get_str() + "," + qd.get_str() + "," + c.method;
}

void emit_cells(const std::vector<Cell>& cells, const std::string& format, std::ostream& out) {
    if (format == "json") {
        if (cells.size() == 1) {
            out << cell_json(cells.front()).dump(2) << "\n";
        } else {
            Json arr = Json::array();
            for (const auto& c : cells) arr.push_back(cell_json(c));
            out << arr.dump(2) << "\n";
        }
    } else if (format == "csv") {
        out << kCsvHeader << "\n";
        for (const auto& c : cells) out << cell_csv(c) << "\n";
    } else if (format == "text") {
        for (const auto& c : cells) {
            out << "p_" << c.j << "^(" << c.n << ") = " << cell_value(c, "frac");
            if (!c.p_upper) out << "  " << decimal_with_marker(c.p);
            out << "  [" << c.method << "]\n";
        }
    } else {
        for (const auto& c : cells) {
            if (cells.size() > 1) out << c.method << ": ";
            out << cell_value(c, format) << "\n";
        }
    }
}

Cell compute(int j, int n, Method m, const Rational& tail_eps, int precision_bits) {
    Cell c{n, j, std::string(method_name(m)), Rational(0), std::nullopt, std::nullopt};
    const WalkParams params(n, j);
    switch (m) {
        case Method::closed:
        case Method::residue:
            c.p = absorption(params, m).p_left;
            break;
        case Method::numeric:
            if (j == 0 || j == n)
                c.p = p_numeric(j, n);
            else
                c.p = integrate_exact(build_integrand(j, n), precision_bits);
            break;
        case Method::simulate:
            if (j == 0 || j == n) {
                c.p = j == 0 ? Rational(1) : Rational(0);
            } else {
                auto rep = simulate(j, n, tail_eps);
                c.p = rep.p_left_lower;
                c.p_upper = rep.p_left_upper();
            }
            break;
    }
    return c;
}

struct Options {
    int n = 0;
    int j = 0;
    int n_min = 2;
    int n_max = 9;
    int terms = 0;
    std::string method = "closed";
    std::string format = "frac";
    int precision_bits = kStartPrecisionBits;
    std::string tail_eps = "1e-10";
    bool common_denominator = false;
    std::string suite = "all";
};

int cmd_prob(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n < 2 || o.j < 0 || o.j > o.n) {
        err << "error: usage: prob needs n >= 2 and 0 <= j <= n (got n=" << o.n << " j=" << o.j << ")\n";
        return kUsageError;
    }
    const Rational eps = Rational::parse(o.tail_eps);
    if (eps.sign() <= 0) throw DomainError("--tail-eps must be positive");

    std::vector<Method> methods;
    if (o.method == "all")
        methods = {Method::closed, Method::residue, Method::numeric, Method::simulate};
    else
        methods = {parse_method(o.method)};

    std::vector<Cell> cells;
    for (Method m : methods) cells.push_back(compute(o.j, o.n, m, eps, o.precision_bits));
    emit_cells(cells, o.format, out);

    if (o.method == "all") {
        const Rational& exact = cells.front().p;
        for (const auto& c : cells) {
            const bool ok = c.p_upper ? (c.p <= exact && exact <= *c.p_upper) : c.p == exact;
            if (!ok) {
                err << "error: verification: method " << c.method << " disagrees with closed form at n=" << o.n
                    << " j=" << o.j << "\n";
                return kVerificationFailure;
            }
        }
    }
    return kSuccess;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream&) {
    if (o.n_min < 2 || o.n_max < o.n_min) throw DomainError("table needs 2 <= n-min <= n-max");
    const Method m = parse_method(o.method);
    if (m == Method::simulate) throw DomainError("table supports closed, residue and numeric methods");

    std::vector<std::vector<Cell>> rows;
    for (int n = o.n_min; n <= o.n_max; ++n) {
        const auto row = row_table(n);
        std::optional<BigInt> over;
        if (o.common_denominator) over = row_common_denominator(row);
        std::vector<Cell> cells;
        for (int j = 1; j < n; ++j) {
            Rational p = row[static_cast<std::size_t>(j - 1)];
            if (m == Method::numeric) {
                Rational q = integrate_exact(build_integrand(j, n), o.precision_bits);
                if (q != p)
                    throw ConsistencyError("numeric integration disagrees at n=" + std::to_string(n) +
                                           " j=" + std::to_string(j));
            }
            cells.push_back(Cell{n, j, std::string(method_name(m)), std::move(p), std::nullopt, over});
        }
        rows.push_back(std::move(cells));
    }

    if (o.format == "csv" || o.format == "json") {
        std::vector<Cell> flat;
        for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
        if (o.format == "json") {
            Json arr = Json::array();
            for (const auto& c : flat) arr.push_back(cell_json(c));
            out << arr.dump(2) << "\n";
        } else {
            emit_cells(flat, "csv", out);
        }
        return kSuccess;
    }
    const std::string cell_format = o.format == "dec" ? "dec" : "frac";
    for (const auto& r : rows) {
        out << "n=" << r.front().n << ":";
        for (const auto& c : r) out << " " << cell_value(c, cell_format);
        out << "\n";
    }
    return kSuccess;
}

int cmd_gf(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n < 2 || o.j < 1 || o.j > o.n) {
        err << "error: usage: gf needs n >= 2 and 1 <= j <= n (got n=" << o.n << " j=" << o.j << ")\n";
        return kUsageError;
    }
    const RationalFunction f = gf(o.j, o.n);
    std::vector<BigInt> series;
    if (o.terms > 0 && o.j < o.n) series = gf_coefficients(o.j, o.n, o.terms);
    if (o.format == "json") {
        Json j;
        j["n"] = o.n;
        j["j"] = o.j;
        j["numerator"] = f.numerator().str();
        j["denominator"] = f.denominator().str();
        if (!series.empty()) {
            Json arr = Json::array();
            for (const auto& c : series) arr.push_back(c.get_str());
            j["series"] = arr;
        }
        out << j.dump(2) << "\n";
        return kSuccess;
    }
    out << "f_" << o.j << "^(" << o.n << ")(z) = " << f.str() << "\n";
    if (!series.empty()) {
        out << "series:";
        for (const auto& c : series) out << " " << c.get_str();
        out << "\n";
    }
    return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (!is_known_suite(o.suite)) {
        err << "error: usage: unknown suite '" << o.suite << "'\n";
        return kUsageError;
    }
    const auto results = run_verification(o.suite, o.n_max);
    int failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
        if (!r.passed) ++failed;
    }
    out << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " checks passed\n";
    if (failed > 0) {
        auto first = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
        err << "error: verification: " << first->name << "\n";
        return kVerificationFailure;
    }
    return kSuccess;
}

void print_roots(const std::string& label, const Polynomial& p, const Rational& radius, int bits, std::ostream& out,
                 Json* json) {
    if (p.degree() < 1) {
        out << label << " = " << p.str() << ": no roots\n";
        if (json) (*json)[label] = Json::array();
        return;
    }
    const RootSet roots = find_roots(p, bits);
    auto [inside, outside] = classify_roots(roots, radius);
    out << label << " = " << p.str() << ": " << roots.size() << " roots, " << inside.size() << " inside, "
        << outside.size() << " outside\n";
    Json arr = Json::array();
    auto dump = [&](const RootSet& set, const char* where) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            const auto& z = set.approximations[i];
            out << "  " << z.str(20) << "  |t|=" << z.abs().str(20) << "  radius<=" << set.radii[i].str(3) << "  "
                << where << "\n";
            arr.push_back({{"re", z.re.str(30)}, {"im", z.im.str(30)}, {"radius", set.radii[i].str(6)},
                           {"location", where}});
        }
    };
    dump(inside, "inside");
    dump(outside, "outside");
    if (json) (*json)[label] = arr;
}

int cmd_roots(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n < 2) {
        err << "error: usage: roots needs n >= 2\n";
        return kUsageError;
    }
    const Integrand ig = build_integrand(1, o.n);
    for (int bits = std::max(o.precision_bits, 32); bits <= kMaxPrecisionBits; bits *= 2) {
        try {
            std::ostringstream text;
            Json json;
            json["n"] = o.n;
            json["radius"] = ig.radius.str();
            json["precision_bits"] = bits;
            text << "n=" << o.n << " contour |t| = " << ig.radius.str() << " (" << bits << " bits)\n";
            print_roots("c", ig.c, ig.radius, bits, text, &json);
            print_roots("d", ig.d, ig.radius, bits, text, &json);
            if (o.format == "json")
                out << json.dump(2) << "\n";
            else
                out << text.str();
            return kSuccess;
        } catch (const PrecisionEscalation&) {
        }
    }
    throw PrecisionFailure("roots: could not certify root disks");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Absorption probabilities of the two-barrier Hadamard walk", "qwalk"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> methods = {"closed", "residue", "numeric", "simulate", "all"};

    auto* prob = app.add_subcommand("prob", "Absorption probability at 0 for one start site");
    prob->add_option("--n", o.n, "Right barrier")->required();
    prob->add_option("--j", o.j, "Start site")->required();
    prob->add_option("--method", o.method)->check(CLI::IsMember(methods));
    prob->add_option("--format", o.format)->check(CLI::IsMember({"frac", "dec", "text", "csv", "json"}));
    prob->add_option("--precision-bits", o.precision_bits, "Starting precision for numeric integration")
        ->check(CLI::Range(32, kMaxPrecisionBits));
    prob->add_option("--tail-eps", o.tail_eps, "Residual mass target for simulate");

    auto* table = app.add_subcommand("table", "Rows of absorption probabilities");
    table->add_option("--n-max", o.n_max)->required();
    table->add_option("--n-min", o.n_min);
    table->add_option("--method", o.method)->check(CLI::IsMember({"closed", "residue", "numeric"}));
    table->add_option("--format", o.format)->check(CLI::IsMember({"frac", "dec", "text", "csv", "json"}));
    table->add_option("--precision-bits", o.precision_bits)->check(CLI::Range(32, kMaxPrecisionBits));
    table->add_flag("--common-denominator", o.common_denominator, "Print each row over its LCM denominator");

    auto* gfc = app.add_subcommand("gf", "Path-count generating function f_j^(n)");
    gfc->add_option("--n", o.n)->required();
    gfc->add_option("--j", o.j)->required();
    gfc->add_option("--terms", o.terms, "Also print this many series coefficients")->check(CLI::Range(0, 10000));
    gfc->add_option("--format", o.format)->check(CLI::IsMember({"frac", "text", "json"}));

    auto* verify = app.add_subcommand("verify", "Run the identity and cross-method checks");
    verify->add_option("--n-max", o.n_max);
    verify->add_option("--suite", o.suite);

    auto* roots = app.add_subcommand("roots", "Roots of the pole factors and their side of |t| = 1/2");
    roots->add_option("--n", o.n)->required();
    roots->add_option("--precision-bits", o.precision_bits)->check(CLI::Range(32, kMaxPrecisionBits));
    roots->add_option("--format", o.format)->check(CLI::IsMember({"frac", "text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        std::replace(what.begin(), what.end(), '\n', ' ');
        err << "error: usage: " << what << "\n";
        return kUsageError;
    }

    try {
        if (prob->parsed()) return cmd_prob(o, out, err);
        if (table->parsed()) return cmd_table(o, out, err);
        if (gfc->parsed()) return cmd_gf(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (roots->parsed()) return cmd_roots(o, out, err);
    } catch (const DomainError& e) {
        err << "error: usage: " << e.what() << "\n";
        return kUsageError;
    } catch (const PrecisionFailure& e) {
        err << "error: precision: " << e.what() << "\n";
        return kPrecisionFailure;
    } catch (const SimulationBudgetExceeded& e) {
        err << "error: precision: " << e.what() << "\n";
        return kPrecisionFailure;
    } catch (const ConsistencyError& e) {
        err << "error: verification: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kUsageError;
}

}  // namespace qwalk::cli
