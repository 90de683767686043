// feuler: Frobenius–Euler numbers, polynomials, basis expansions and identity checks.

#include <feuler/basis.hpp>
#include <feuler/core.hpp>
#include <feuler/identity_lab.hpp>
#include <feuler/io.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace feuler;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned non_negative(long long v, const char *name)
{
    if (v < 0) {
        throw UsageError(std::string(name) + " must be non-negative");
    }
    return static_cast<unsigned>(v);
}

std::string render(const LRat &f, const std::string &format)
{
    if (format == "latex") {
        return to_latex(f);
    }
    if (format == "json") {
        return to_json(f).dump();
    }
    return to_text(f);
}

std::string render(const XPoly &p, const std::string &format)
{
    if (format == "latex") {
        return to_latex(p);
    }
    if (format == "json") {
        return to_json(p).dump();
    }
    return to_text(p);
}

std::string render(const FEExpansion &e, const std::string &format)
{
    if (format == "json") {
        return to_json(e).dump();
    }
    std::ostringstream out;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
        if (format == "latex") {
            out << "C_{" << k << "} = " << to_latex(e.coeffs[k]) << "\n";
        } else {
            out << "C_" << k << " = " << to_text(e.coeffs[k]) << "\n";
        }
    }
    std::string s = out.str();
    if (!s.empty()) {
        s.pop_back();
    }
    return s;
}

std::string read_all(const std::string &path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string range_text(unsigned lo, unsigned hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

void print_report_text(std::ostream &out, const IdentityReport &r)
{
    out << std::left << std::setw(24) << r.id << " n=" << r.n;
    if (r.r) {
        out << " r=" << *r.r;
    }
    out << "  " << to_string(r.status);
    if (r.status == Status::Refuted) {
        out << "  residual: " << to_text(r.residual);
    }
    if (r.screen) {
        out << "  screen: " << (r.screen->passed() ? "pass" : "counterexample");
    }
    out << "\n";
}

void write_summary_table(std::ostream &out, const json &header, const std::vector<IdentitySummary> &rows)
{
    out << "# Frobenius-Euler identity report\n";
    out << "# grid: n <= " << header["max_n"].get<unsigned>() << ", r <= " << header["max_r"].get<unsigned>() << "\n";
    if (!header["screen"].is_null()) {
        out << "# screen: " << header["screen"]["generator"].get<std::string>()
            << " seed=" << header["screen"]["seed"].get<std::uint64_t>()
            << " trials/instance=" << header["screen"]["trials_per_instance"].get<unsigned>() << "\n";
    }
    out << std::left << std::setw(24) << "id" << std::setw(12) << "variant" << std::setw(14) << "range"
        << std::setw(10) << "verdict" << std::setw(16) << "screen"
        << "first counterexample\n";
    for (const auto &s : rows) {
        const Identity &id = *s.identity;
        std::string range = "n=" + range_text(id.n_min, s.n_max);
        if (s.r_max) {
            range += ",r=" + range_text(id.r_min, *s.r_max);
        }
        std::string screen = s.screened == 0 ? "-" : (s.first_screen_failure ? "counterexample" : "pass");
        std::string first = "-";
        if (s.first_counterexample) {
            const auto &c = *s.first_counterexample;
            first = "n=" + std::to_string(c.n) + (c.r ? " r=" + std::to_string(*c.r) : "") +
                    " residual: " + to_text(c.residual);
        }
        out << std::setw(24) << id.id << std::setw(12) << to_string(id.variant) << std::setw(14) << range
            << std::setw(10) << to_string(s.verdict()) << std::setw(16) << screen << first << "\n";
    }
}

json summary_document(const json &header, const std::vector<IdentitySummary> &rows)
{
    json doc = json::object();
    doc["header"] = header;
    json ids = json::array();
    for (const auto &s : rows) {
        ids.push_back(to_json(s));
    }
    doc["identities"] = std::move(ids);
    return doc;
}

std::vector<IdentitySummary> summarize_all(unsigned n_max, unsigned r_max, std::optional<std::uint64_t> seed,
                                           unsigned trials)
{
    std::vector<IdentitySummary> rows;
    for (const auto &identity : registry_list()) {
        rows.push_back(summarize(identity, n_max, r_max, seed, trials));
    }
    return rows;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact Frobenius-Euler numbers, polynomials, basis expansions and identity verification"};
    app.require_subcommand(1);

    long long n = 0;
    long long order = 1;
    long long max_n = 8;
    long long max_r = 4;
    std::string format = "text";
    std::string input;
    std::string output;
    std::string id;
    std::optional<std::uint64_t> seed;
    unsigned trials = 4;

    const auto formats = CLI::IsMember({"text", "json", "latex"});

    auto *number = app.add_subcommand("number", "Frobenius-Euler number H_n^(r)(λ)");
    number->add_option("n", n, "index n")->required();
    number->add_option("-r,--order", order, "order r (default 1)");
    number->add_option("--format", format, "text | json | latex")->check(formats);

    auto *poly = app.add_subcommand("poly", "Frobenius-Euler polynomial H_n^(r)(x|λ)");
    poly->add_option("n", n, "degree n")->required();
    poly->add_option("-r,--order", order, "order r (default 1; 0 gives x^n)");
    poly->add_option("--format", format, "text | json | latex")->check(formats);

    auto *expand = app.add_subcommand("expand", "Expand a polynomial (XPoly JSON) in the order-r basis");
    expand->add_option("input", input, "XPoly JSON file, or - for stdin")->required();
    expand->add_option("-r,--order", order, "basis order r >= 1 (default 1)");
    expand->add_option("--format", format, "text | json | latex")->check(formats);

    std::string verify_format = "json";
    auto *verify = app.add_subcommand("verify", "Verify a registered identity (or all) over a grid");
    verify->add_option("id", id, "identity id, or 'all'")->required();
    verify->add_option("--max-n", max_n, "largest n (default 8)");
    verify->add_option("--max-r", max_r, "largest r (default 4)");
    verify->add_option("--screen-seed", seed, "seed for the randomized screen");
    verify->add_option("--screen-trials", trials, "screen trials per instance (default 4)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", verify_format, "json (JSON lines) | text")->check(CLI::IsMember({"json", "text"}));

    std::string report_format = "json";
    auto *report = app.add_subcommand("report", "Write the per-identity status document");
    report->add_option("--max-n", max_n, "largest n (default 8)");
    report->add_option("--max-r", max_r, "largest r (default 4)");
    report->add_option("--screen-seed", seed, "seed for the randomized screen");
    report->add_option("--screen-trials", trials, "screen trials per instance (default 4)")
        ->check(CLI::PositiveNumber);
    report->add_option("-o,--output", output, "output path (default stdout)");
    report->add_option("--format", report_format, "json | text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*number) {
            const unsigned nn = non_negative(n, "n");
            if (order < 1) {
                throw UsageError("number: order must be at least 1");
            }
            std::cout << render(fe_number_higher(nn, static_cast<unsigned>(order)), format) << "\n";
            return kOk;
        }
        if (*poly) {
            const unsigned nn = non_negative(n, "n");
            const unsigned r = non_negative(order, "order");
            std::cout << render(fe_poly_higher(nn, r), format) << "\n";
            return kOk;
        }
        if (*expand) {
            if (order < 1) {
                throw UsageError("expand: order must be at least 1");
            }
            XPoly p;
            try {
                p = xpoly_from_json(json::parse(read_all(input)));
            } catch (const json::exception &e) {
                throw UsageError(std::string("malformed input: ") + e.what());
            } catch (const std::invalid_argument &e) {
                throw UsageError(std::string("malformed input: ") + e.what());
            }
            const auto r = static_cast<unsigned>(order);
            std::cout << render(r == 1 ? to_fe_basis(p) : to_fe_basis_higher(p, r), format) << "\n";
            return kOk;
        }
        const unsigned nmax = non_negative(max_n, "max-n");
        const unsigned rmax = non_negative(max_r, "max-r");
        if (*verify) {
            if (id == "all") {
                // Screen first, then the full comparison; both land in the summary.
                const std::uint64_t s = seed.value_or(0);
                const auto rows = summarize_all(nmax, rmax, s, trials);
                const json header = report_header(nmax, rmax, s, trials);
                bool ok = true;
                for (const auto &row : rows) {
                    if (row.identity->authoritative && row.verdict() != Status::Verified) {
                        ok = false;
                    }
                }
                if (verify_format == "text") {
                    write_summary_table(std::cout, header, rows);
                } else {
                    std::cout << summary_document(header, rows).dump() << "\n";
                }
                return ok ? kOk : kRefuted;
            }
            const Identity &identity = [&]() -> const Identity & {
                try {
                    return find_identity(id);
                } catch (const std::invalid_argument &e) {
                    throw UsageError(e.what());
                }
            }();
            bool ok = true;
            for (unsigned nn = identity.n_min; nn <= nmax; ++nn) {
                for (unsigned r = identity.uses_r ? identity.r_min : 0; r <= (identity.uses_r ? rmax : 0); ++r) {
                    const std::optional<unsigned> ro = identity.uses_r ? std::optional<unsigned>(r) : std::nullopt;
                    IdentityReport rep = verify_identity(identity.id, nn, ro);
                    if (seed) {
                        rep.seed = seed;
                        rep.screen = random_screen(identity.id, nn, ro, trials, *seed);
                    }
                    ok = ok && rep.status == Status::Verified;
                    if (verify_format == "text") {
                        print_report_text(std::cout, rep);
                    } else {
                        std::cout << to_json(rep).dump() << "\n";
                    }
                }
            }
            return ok ? kOk : kRefuted;
        }
        if (*report) {
            const auto rows = summarize_all(nmax, rmax, seed, trials);
            const json header = report_header(nmax, rmax, seed, trials);
            std::ostringstream doc;
            if (report_format == "text") {
                write_summary_table(doc, header, rows);
            } else {
                doc << summary_document(header, rows).dump(2) << "\n";
            }
            if (output.empty()) {
                std::cout << doc.str();
            } else {
                std::ofstream out(output, std::ios::binary);
                if (!out || !(out << doc.str()) || !out.flush()) {
                    throw UsageError("cannot write '" + output + "'");
                }
            }
            return kOk;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
