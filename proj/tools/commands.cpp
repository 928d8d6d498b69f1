#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "qpos/errors.hpp"
#include "qpos/identities.hpp"
#include "qpos/merca.hpp"
#include "qpos/periodic.hpp"
#include "qpos/serialize.hpp"
#include "qpos/verifier.hpp"

#ifndef QPOS_EXPECTED_TABLES
#define QPOS_EXPECTED_TABLES "expected_tables.csv"
#endif
#ifndef QPOS_INSTALLED_TABLES
#define QPOS_INSTALLED_TABLES "share/qpos/expected_tables.csv"
#endif

namespace qpos::cli {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ' && ch != '\t' && ch != '\r') {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::int64_t parse_int(const std::string& s)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) {
        throw UsageError("not an integer: '" + s + "'");
    }
    return v;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            s += sep;
        }
        s += std::to_string(v[i]);
    }
    return s;
}

std::string triple_label(std::int64_t a, std::int64_t b, std::int64_t c)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

ordered_json integer_json(const Integer& z)
{
    if (z.fits_slong_p()) {
        return static_cast<std::int64_t>(z.get_si());
    }
    return z.get_str();
}

ordered_json row_json(const TableRow& row)
{
    return ordered_json{{"a", row.a}, {"b", row.b}, {"c", row.c}, {"A", row.A}, {"B", row.B},
                        {"D", row.D}, {"K", row.K}, {"N", row.N}};
}

// Options shared by every subcommand.
struct Common {
    std::string format = "text";
    std::string output;
    std::string output_dir;
};

void add_common(CLI::App* sub, Common& c, const char* default_format)
{
    c.format = default_format;
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("-o,--output", c.output, "Write output to this file instead of stdout");
    sub->add_option("--output-dir", c.output_dir, "Base directory for relative --output paths")
        ->envname("QPOS_OUTPUT_DIR");
}

int emit(const std::string& text, const Common& c, std::ostream& out, std::ostream& err)
{
    if (c.output.empty()) {
        out << text;
        return kExitOk;
    }
    std::filesystem::path path(c.output);
    if (path.is_relative() && !c.output_dir.empty()) {
        path = std::filesystem::path(c.output_dir) / path;
    }
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot write " << path.string() << "\n";
        return kExitUsage;
    }
    f << text;
    return kExitOk;
}

FamilyParams family_from(const std::string& triple, const std::string& form)
{
    return make_family(parse_triple(triple), parse_form(form));
}

// ---------------------------------------------------------------- tables

struct TablesOptions {
    Common common;
    std::string family;
    std::string form;
    std::string expected = default_expected_path();
};

std::string csv_header(std::size_t n_count)
{
    std::string h = "a,b,c,A,B,D,K";
    for (std::size_t i = 1; i <= n_count; ++i) {
        h += ",N_" + std::to_string(i);
    }
    return h + "\n";
}

int cmd_tables(const TablesOptions& o, std::ostream& out, std::ostream& err)
{
    struct Group {
        std::string caption;
        std::vector<TableRow> rows;
    };
    std::vector<Group> groups;
    const bool filtered = !o.family.empty();
    if (filtered) {
        const auto p = family_from(o.family, o.form.empty() ? "3/2,1/2" : o.form);
        groups.push_back({"", {compute_row(p)}});
    } else {
        if (!o.form.empty()) {
            throw UsageError("--form requires --family");
        }
        for (const auto& t : canonical_tables()) {
            Group g{t.caption, {}};
            const ThetaForm form(parse_rational(t.A), parse_rational(t.B));
            for (const auto& abc : t.triples) {
                g.rows.push_back(compute_row(make_family(CoprimeTriple(abc[0], abc[1], abc[2]), form)));
            }
            groups.push_back(std::move(g));
        }
    }

    std::vector<TableRow> expected;
    try {
        expected = read_expected(o.expected);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto key = [](const TableRow& r) { return std::make_tuple(r.a, r.b, r.c, r.A, r.B); };
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::string, std::string>, const TableRow*> by_key;
    for (const auto& r : expected) {
        by_key[key(r)] = &r;
    }

    std::vector<std::string> problems;
    std::size_t max_n = 0;
    std::size_t produced = 0;
    for (const auto& g : groups) {
        for (const auto& row : g.rows) {
            ++produced;
            max_n = std::max(max_n, row.N.size());
            const std::string label = triple_label(row.a, row.b, row.c) + " A=" + row.A + " B=" + row.B;
            auto it = by_key.find(key(row));
            if (it == by_key.end()) {
                if (!filtered) {
                    problems.push_back(label + ": no expected row");
                } else {
                    err << "note: " << label << " has no expected row\n";
                }
                continue;
            }
            for (const auto& d : diff_rows(*it->second, row)) {
                problems.push_back(label + ": " + d);
            }
            by_key.erase(it);
        }
    }
    if (!filtered) {
        for (const auto& [k, r] : by_key) {
            problems.push_back(triple_label(r->a, r->b, r->c) + " A=" + r->A + " B=" + r->B +
                               ": expected row was not produced");
        }
    }

    std::ostringstream os;
    const Format fmt = parse_format(o.common.format);
    if (fmt == Format::json) {
        ordered_json tables = ordered_json::array();
        for (const auto& g : groups) {
            ordered_json rows = ordered_json::array();
            for (const auto& r : g.rows) {
                rows.push_back(row_json(r));
            }
            tables.push_back({{"caption", g.caption}, {"rows", rows}});
        }
        ordered_json doc{{"kind", "threshold_tables"},
                         {"tables", tables},
                         {"mismatches", problems},
                         {"verdict", problems.empty() ? "pass" : "fail"}};
        os << doc.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        os << csv_header(max_n);
        for (const auto& g : groups) {
            for (const auto& r : g.rows) {
                os << format_row_csv(r) << "\n";
            }
        }
    } else {
        bool first = true;
        for (const auto& g : groups) {
            if (!g.caption.empty()) {
                os << (first ? "" : "\n") << g.caption << "\n";
                os << "(a,b,c) | D | K | N^k\n";
            }
            first = false;
            for (const auto& r : g.rows) {
                os << format_row_text(r) << "\n";
            }
        }
        os << "\n" << produced << (produced == 1 ? " row, " : " rows, ") << problems.size()
           << (problems.size() == 1 ? " mismatch\n" : " mismatches\n");
    }
    if (const int rc = emit(os.str(), o.common, out, err); rc != kExitOk) {
        return rc;
    }
    for (const auto& p : problems) {
        err << "mismatch " << p << "\n";
    }
    return problems.empty() ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    Common common;
    std::string family;
    std::string form = "3/2,1/2";
    std::size_t sample_T = 2000;
    std::int64_t sample_k = 3;
};

std::string certificate_text(const PositivityCertificate& cert)
{
    std::ostringstream os;
    const auto& t = cert.params.triple;
    os << "family " << triple_label(t.a(), t.b(), t.c()) << " A=" << to_string(cert.params.form.A())
       << " B=" << to_string(cert.params.form.B()) << "\n";
    os << "D = " << to_string(cert.params.D) << "\n";
    os << "K = " << cert.thresholds.K << "\n";
    for (const auto& c : cert.checked) {
        os << "k=" << c.k << " L=" << c.L << " N=" << c.N << " min gamma(n) over n < N = " << c.min_coeff.get_str()
           << " at n=" << c.min_at << "\n";
    }
    if (cert.sample.k_last >= cert.sample.k_first) {
        os << "sample k=" << cert.sample.k_first << ".." << cert.sample.k_last << " to order " << cert.sample.T
           << ": " << (cert.sample.pass ? "nonnegative" : "negative coefficient") << "\n";
    }
    os << "verdict: " << (cert.pass ? "pass" : "fail") << "\n";
    return os.str();
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.sample_k < 0) {
        throw UsageError("--sample-k must be >= 0");
    }
    const auto p = family_from(o.family, o.form);
    const auto cert = certify_family(p, {o.sample_T, o.sample_k});
    std::string text;
    switch (parse_format(o.common.format)) {
    case Format::json: text = to_json(cert) + "\n"; break;
    case Format::csv: {
        std::vector<std::int64_t> N;
        for (const auto& c : cert.checked) {
            N.push_back(c.N);
        }
        const TableRow row{p.triple.a(), p.triple.b(), p.triple.c(), to_string(p.form.A()), to_string(p.form.B()),
                           to_string(p.D), cert.thresholds.K, N};
        text = csv_header(N.size()) + format_row_csv(row) + "\n";
        break;
    }
    case Format::text: text = certificate_text(cert); break;
    }
    if (const int rc = emit(text, o.common, out, err); rc != kExitOk) {
        return rc;
    }
    return cert.pass ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- identity

struct IdentityOptions {
    Common common;
    std::size_t T = 500;
    std::int64_t k_max = 10;
    std::size_t tail_T = 1000;
    std::int64_t tail_k = 8;
};

int cmd_identity(const IdentityOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.k_max < 1 || o.tail_k < 1) {
        throw UsageError("k ranges must start at 1");
    }
    std::vector<IdentityReport> reports;
    reports.push_back(check_pentagonal(o.T));
    const auto [squares, triangular] = check_gauss(o.T);
    reports.push_back(squares);
    reports.push_back(triangular);
    reports.push_back(check_jacobi(JacobiProduct::q1_q4_q5, o.T));
    reports.push_back(check_jacobi(JacobiProduct::q2_q3_q5, o.T));
    for (std::int64_t k = 1; k <= o.k_max; ++k) {
        reports.push_back(check_andrews_merca(k, o.T));
        reports.push_back(check_guo_zeng(GuoZeng::overpartition, k, o.T));
        reports.push_back(check_guo_zeng(GuoZeng::pod, k, o.T));
        for (Equivalence e : kAllEquivalences) {
            reports.push_back(check_equivalence(e, k, o.T));
        }
    }

    struct Tail {
        TailFamily family;
        std::int64_t k;
        MinCoefficient min;
    };
    std::vector<Tail> tails;
    for (TailFamily t : kAllTailFamilies) {
        for (std::int64_t k = 1; k <= o.tail_k; ++k) {
            tails.push_back({t, k, min_coefficient(tail_positivity_series(t, k, o.tail_T))});
        }
    }

    bool pass = true;
    for (const auto& r : reports) {
        pass = pass && r.equal;
    }
    for (const auto& t : tails) {
        pass = pass && t.min.value >= 0;
    }

    std::ostringstream os;
    const Format fmt = parse_format(o.common.format);
    if (fmt == Format::json) {
        ordered_json doc{{"kind", "identity_suite"}, {"order", o.T}};
        doc["reports"] = ordered_json::parse(to_json(std::span<const IdentityReport>(reports)))["reports"];
        ordered_json tj = ordered_json::array();
        for (const auto& t : tails) {
            tj.push_back({{"family", name_of(t.family)},
                          {"k", t.k},
                          {"T", o.tail_T},
                          {"min_coeff", integer_json(t.min.value)},
                          {"min_at", t.min.at}});
        }
        doc["tails"] = tj;
        doc["verdict"] = pass ? "pass" : "fail";
        os << doc.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        os << "name,order,equal,first_mismatch\n";
        for (const auto& r : reports) {
            os << r.name << "," << r.order << "," << (r.equal ? "true" : "false") << ","
               << (r.first_mismatch ? std::to_string(*r.first_mismatch) : "") << "\n";
        }
        for (const auto& t : tails) {
            os << "tail_" << name_of(t.family) << "_k" << t.k << "," << o.tail_T << ","
               << (t.min.value >= 0 ? "true" : "false") << ",\n";
        }
    } else {
        for (const auto& r : reports) {
            os << (r.equal ? "ok   " : "FAIL ") << r.name << " to q^" << r.order;
            if (r.first_mismatch) {
                os << " (first mismatch at q^" << *r.first_mismatch << ")";
            }
            os << "\n";
        }
        for (const auto& t : tails) {
            os << (t.min.value >= 0 ? "ok   " : "FAIL ") << "tail " << name_of(t.family) << " k=" << t.k
               << " nonnegative to q^" << o.tail_T << " (min " << t.min.value.get_str() << ")\n";
        }
        os << "verdict: " << (pass ? "pass" : "fail") << "\n";
    }
    if (const int rc = emit(os.str(), o.common, out, err); rc != kExitOk) {
        return rc;
    }
    return pass ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- merca

struct MercaOptions {
    Common common;
    std::int64_t k_max = 10;
    std::size_t T = 2000;
    std::size_t route_T = 500;
};

int cmd_merca(const MercaOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.k_max < 1) {
        throw UsageError("--k must be >= 1");
    }
    if (o.route_T > o.T) {
        throw UsageError("--route-T must not exceed --T");
    }
    const MercaContext ctx(o.T);
    const MercaContext route_ctx(o.route_T);
    const bool lemma_ok = min_coefficient(ctx.P()).value >= 0;

    bool pattern_ok = true;
    for (std::int64_t k = 1; k <= o.k_max && pattern_ok; ++k) {
        const auto g = gamma_prime_series(k, o.T);
        for (std::size_t n = 0; n <= o.T; ++n) {
            if (g[n] != gamma_prime_pattern(k, static_cast<std::int64_t>(n))) {
                pattern_ok = false;
                break;
            }
        }
    }

    std::vector<MercaCertificate> certs;
    for (int which : {1, 2}) {
        for (std::int64_t k = 1; k <= o.k_max; ++k) {
            certs.push_back(check_merca_conjecture(ctx, route_ctx, which, k));
        }
    }
    bool pass = lemma_ok && pattern_ok;
    for (const auto& c : certs) {
        pass = pass && c.pass;
    }

    std::ostringstream os;
    const Format fmt = parse_format(o.common.format);
    if (fmt == Format::json) {
        ordered_json cj = ordered_json::array();
        for (const auto& c : certs) {
            cj.push_back(ordered_json::parse(to_json(c)));
        }
        ordered_json doc{{"kind", "merca_suite"},
                         {"order", o.T},
                         {"lemma_P_nonnegative", lemma_ok},
                         {"gamma_prime_pattern", pattern_ok},
                         {"conjectures", cj},
                         {"verdict", pass ? "pass" : "fail"}};
        os << doc.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        os << "which,k,T,min_coeff,min_at,nonnegative,route_T,routes_equal\n";
        for (const auto& c : certs) {
            os << c.which << "," << c.k << "," << c.T << "," << c.min_coeff.get_str() << "," << c.min_at << ","
               << (c.nonnegative ? "true" : "false") << "," << c.route_T << ","
               << (c.routes_equal ? "true" : "false") << "\n";
        }
    } else {
        os << (lemma_ok ? "ok   " : "FAIL ") << "P(q) nonnegative to q^" << o.T << "\n";
        os << (pattern_ok ? "ok   " : "FAIL ") << "gamma' interval pattern for k <= " << o.k_max << "\n";
        for (const auto& c : certs) {
            os << (c.pass ? "ok   " : "FAIL ") << "conjecture " << c.which << " k=" << c.k << ": min "
               << c.min_coeff.get_str() << " to q^" << c.T << ", routes "
               << (c.routes_equal ? "equal" : "differ") << " to q^" << c.route_T << "\n";
        }
        os << "verdict: " << (pass ? "pass" : "fail") << "\n";
    }
    if (const int rc = emit(os.str(), o.common, out, err); rc != kExitOk) {
        return rc;
    }
    return pass ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- period

struct PeriodOptions {
    Common common;
    std::string parts;
};

int cmd_period(const PeriodOptions& o, std::ostream& out, std::ostream& err)
{
    const auto parts = parse_int_list(o.parts);
    const Format fmt = parse_format(o.common.format);
    std::ostringstream os;
    if (parts.size() == 3) {
        const auto d = decompose(parse_triple(o.parts));
        const auto& t = d.triple;
        if (fmt == Format::json) {
            os << to_json(d) << "\n";
        } else if (fmt == Format::csv) {
            os << "a,b,c,period,D\n" << t.a() << "," << t.b() << "," << t.c() << "," << d.period << ","
               << to_string(d.D) << "\n";
        } else {
            os << triple_label(t.a(), t.b(), t.c()) << " period " << d.period << " verified, D = "
               << to_string(d.D) << "\n";
        }
    } else if (parts.size() == 4 || parts.size() == 5) {
        const CoprimeTuple45 tuple(parts);
        const auto r = remainder_45(tuple);
        std::vector<std::int64_t> sorted(tuple.parts().begin(), tuple.parts().end());
        if (fmt == Format::json) {
            os << to_json(tuple, r) << "\n";
        } else if (fmt == Format::csv) {
            os << "parts,period,max_abs\n\"" << join(sorted, ",") << "\"," << r.period << ","
               << to_string(r.max_abs) << "\n";
        } else {
            os << "(" << join(sorted, ",") << ") period " << r.period << " verified, max |t(n)| = "
               << to_string(r.max_abs) << "\n";
        }
    } else {
        throw UsageError("--triple needs 3, 4 or 5 parts");
    }
    return emit(os.str(), o.common, out, err);
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
    Common common;
    std::string form = "3/2,1/2";
    std::int64_t limit = 30;
    std::size_t sample_T = 300;
    std::int64_t sample_k = 1;
};

int cmd_scan(const ScanOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.limit < 6) {
        throw UsageError("--limit must be at least 6 (the smallest product is 1*2*3)");
    }
    const ThetaForm form = parse_form(o.form);
    struct Entry {
        TableRow row;
        bool pass;
    };
    std::vector<Entry> entries;
    for (std::int64_t a = 1; a * (a + 1) * (a + 2) <= o.limit; ++a) {
        for (std::int64_t b = a + 1; a * b * (b + 1) <= o.limit; ++b) {
            for (std::int64_t c = b + 1; a * b * c <= o.limit; ++c) {
                if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
                    continue;
                }
                const auto p = make_family(CoprimeTriple(a, b, c), form);
                const auto cert = certify_family(p, {o.sample_T, o.sample_k});
                std::vector<std::int64_t> N;
                for (const auto& kc : cert.checked) {
                    N.push_back(kc.N);
                }
                entries.push_back({{a, b, c, to_string(form.A()), to_string(form.B()), to_string(p.D),
                                    cert.thresholds.K, N},
                                   cert.pass});
            }
        }
    }

    std::ostringstream os;
    const Format fmt = parse_format(o.common.format);
    if (fmt == Format::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& e : entries) {
            auto j = row_json(e.row);
            j["verdict"] = e.pass ? "pass" : "fail";
            rows.push_back(j);
        }
        ordered_json doc{{"kind", "triple_scan"}, {"limit", o.limit}, {"rows", rows}, {"verdict", "pass"}};
        os << doc.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        os << "a,b,c,A,B,D,K,verdict,N\n";
        for (const auto& e : entries) {
            const auto& r = e.row;
            os << r.a << "," << r.b << "," << r.c << "," << r.A << "," << r.B << "," << r.D << "," << r.K << ","
               << (e.pass ? "pass" : "fail") << ",\"" << join(r.N, ",") << "\"\n";
        }
    } else {
        std::vector<std::string> passing;
        for (const auto& e : entries) {
            os << format_row_text(e.row) << " | " << (e.pass ? "pass" : "fail") << "\n";
            if (e.pass) {
                passing.push_back(triple_label(e.row.a, e.row.b, e.row.c));
            }
        }
        os << "nonnegative for every k:";
        for (const auto& s : passing) {
            os << " " << s;
        }
        os << "\n";
    }
    return emit(os.str(), o.common, out, err);
}

} // namespace

Format parse_format(std::string_view s)
{
    if (s == "text") {
        return Format::text;
    }
    if (s == "json") {
        return Format::json;
    }
    if (s == "csv") {
        return Format::csv;
    }
    throw UsageError("unknown format '" + std::string(s) + "'");
}

std::vector<std::int64_t> parse_int_list(std::string_view s)
{
    std::vector<std::int64_t> v;
    for (const auto& p : split(s, ',')) {
        v.push_back(parse_int(p));
    }
    return v;
}

CoprimeTriple parse_triple(std::string_view s)
{
    const auto v = parse_int_list(s);
    if (v.size() != 3) {
        throw UsageError("a triple needs exactly three integers: '" + std::string(s) + "'");
    }
    try {
        return CoprimeTriple(v[0], v[1], v[2]);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

ThetaForm parse_form(std::string_view s)
{
    const auto parts = split(s, ',');
    if (parts.size() != 2) {
        throw UsageError("a form needs A,B: '" + std::string(s) + "'");
    }
    try {
        return ThetaForm(parse_rational(parts[0]), parse_rational(parts[1]));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

const std::vector<TableSpec>& canonical_tables()
{
    static const std::vector<TableSpec> tables = {
        {"The case A=3/2 and B=1/2", "3/2", "1/2",
         {{1, 2, 3}, {1, 2, 5}, {1, 2, 7}, {1, 3, 4}, {1, 3, 5}, {1, 3, 8}, {1, 4, 5}, {1, 4, 7}}},
        {"The case A=1 and B=0", "1", "0", {{1, 2, 3}, {1, 2, 5}, {1, 3, 5}}},
        {"The case A=2 and B=1", "2", "1", {{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {1, 5, 7}}},
        {"The case A=5/2 and B=3/2", "5/2", "3/2", {{1, 4, 5}}},
        {"The case A=5/2 and B=1/2", "5/2", "1/2", {{2, 3, 5}}},
    };
    return tables;
}

TableRow compute_row(const FamilyParams& p)
{
    const auto t = compute_thresholds(p);
    TableRow row{p.triple.a(), p.triple.b(), p.triple.c(), to_string(p.form.A()), to_string(p.form.B()),
                 to_string(p.D), t.K, {}};
    for (const auto& kt : t.per_k) {
        row.N.push_back(kt.N);
    }
    return row;
}

std::vector<TableRow> read_expected(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read expected tables from '" + path + "'");
    }
    std::vector<TableRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() < 7 || cells[0] == "a") {
            if (cells.size() >= 1 && cells[0] == "a") {
                continue;
            }
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected at least 7 columns");
        }
        TableRow r;
        try {
            r.a = parse_int(cells[0]);
            r.b = parse_int(cells[1]);
            r.c = parse_int(cells[2]);
            r.A = to_string(parse_rational(cells[3]));
            r.B = to_string(parse_rational(cells[4]));
            r.D = to_string(parse_rational(cells[5]));
            r.K = parse_int(cells[6]);
            for (std::size_t i = 7; i < cells.size(); ++i) {
                r.N.push_back(parse_int(cells[i]));
            }
        } catch (const std::exception& e) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<std::string> diff_rows(const TableRow& expected, const TableRow& actual)
{
    std::vector<std::string> d;
    if (expected.D != actual.D) {
        d.push_back("D expected " + expected.D + " got " + actual.D);
    }
    if (expected.K != actual.K) {
        d.push_back("K expected " + std::to_string(expected.K) + " got " + std::to_string(actual.K));
    }
    const std::size_t n = std::max(expected.N.size(), actual.N.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::string e = i < expected.N.size() ? std::to_string(expected.N[i]) : "-";
        const std::string a = i < actual.N.size() ? std::to_string(actual.N[i]) : "-";
        if (e != a) {
            d.push_back("N_" + std::to_string(i + 1) + " expected " + e + " got " + a);
        }
    }
    return d;
}

std::string format_row_text(const TableRow& row)
{
    return triple_label(row.a, row.b, row.c) + " | " + row.D + " | " + std::to_string(row.K) + " | " +
           join(row.N, ",");
}

std::string format_row_csv(const TableRow& row)
{
    std::string s = std::to_string(row.a) + "," + std::to_string(row.b) + "," + std::to_string(row.c) + "," + row.A +
                    "," + row.B + "," + row.D + "," + std::to_string(row.K);
    for (auto n : row.N) {
        s += "," + std::to_string(n);
    }
    return s;
}

std::string default_expected_path()
{
    if (const char* env = std::getenv("QPOS_EXPECTED_TABLES")) {
        return env;
    }
    if (std::filesystem::exists(QPOS_EXPECTED_TABLES)) {
        return QPOS_EXPECTED_TABLES;
    }
    // Installed layout: <prefix>/bin/qpos next to <prefix>/share/qpos/.
    std::error_code ec;
    const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        const auto installed = exe.parent_path().parent_path() / QPOS_INSTALLED_TABLES;
        if (std::filesystem::exists(installed)) {
            return installed.string();
        }
    }
    return QPOS_EXPECTED_TABLES;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact thresholds and positivity certificates for truncated theta quotients", "qpos"};
    app.set_config("--config", "", "Read options from a TOML or INI file");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    TablesOptions tables;
    auto* st = app.add_subcommand("tables", "Recompute the threshold tables and diff them against expected values");
    add_common(st, tables.common, "text");
    st->add_option("--family", tables.family, "Only this triple, e.g. 1,2,3");
    st->add_option("--form", tables.form, "A,B for --family (default 3/2,1/2)");
    st->add_option("--expected", tables.expected, "Expected-values file")->capture_default_str();

    VerifyOptions verify;
    auto* sv = app.add_subcommand("verify", "Certify nonnegativity for one family");
    add_common(sv, verify.common, "json");
    sv->add_option("--family", verify.family, "Triple a,b,c")->required();
    sv->add_option("--form", verify.form, "A,B as p/q or decimal halves")->capture_default_str();
    sv->add_option("--sample-T", verify.sample_T, "Order for the k >= K sanity sample")->capture_default_str();
    sv->add_option("--sample-k", verify.sample_k, "Number of k >= K values to sample")->capture_default_str();

    IdentityOptions identity;
    auto* si = app.add_subcommand("identity", "Check the classical and truncated identities");
    add_common(si, identity.common, "text");
    si->add_option("--T", identity.T, "Order for identity checks")->capture_default_str();
    si->add_option("--k", identity.k_max, "Largest k for truncated identities")->capture_default_str();
    si->add_option("--tail-T", identity.tail_T, "Order for tail positivity")->capture_default_str();
    si->add_option("--tail-k", identity.tail_k, "Largest k for tail positivity")->capture_default_str();

    MercaOptions merca;
    auto* sm = app.add_subcommand("merca", "Check the product lemma, the gamma' pattern and both conjectures");
    add_common(sm, merca.common, "text");
    sm->add_option("--k", merca.k_max, "Largest k")->capture_default_str();
    sm->add_option("--T", merca.T, "Order for nonnegativity")->capture_default_str();
    sm->add_option("--route-T", merca.route_T, "Order for the two-route comparison")->capture_default_str();

    PeriodOptions period;
    auto* sp = app.add_subcommand("period", "Verify periodicity of the quasi-polynomial remainder");
    add_common(sp, period.common, "text");
    sp->add_option("--triple", period.parts, "3, 4 or 5 pairwise coprime parts")->required();

    ScanOptions scan;
    auto* ss = app.add_subcommand("scan", "Certify every coprime triple with abc up to a limit");
    add_common(ss, scan.common, "text");
    ss->add_option("--form", scan.form, "A,B")->capture_default_str();
    ss->add_option("--limit", scan.limit, "Upper bound on abc")->capture_default_str();
    ss->add_option("--sample-T", scan.sample_T, "Order for the k >= K sanity sample")->capture_default_str();
    ss->add_option("--sample-k", scan.sample_k, "Number of k >= K values to sample")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (st->parsed()) {
            return cmd_tables(tables, out, err);
        }
        if (sv->parsed()) {
            return cmd_verify(verify, out, err);
        }
        if (si->parsed()) {
            return cmd_identity(identity, out, err);
        }
        if (sm->parsed()) {
            return cmd_merca(merca, out, err);
        }
        if (sp->parsed()) {
            return cmd_period(period, out, err);
        }
        if (ss->parsed()) {
            return cmd_scan(scan, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.push_back("qpos");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qpos::cli
