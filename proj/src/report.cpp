#include "farkas/report.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace farkas {

std::string exact_string(const GaussianRational& z)
{
    return z.is_real() ? z.re().str() : z.str();
}

std::string decimal_string(const GaussianRational& z)
{
    if (z.is_real())
        return z.re().decimal(12);
    std::string out = z.re().decimal(12);
    out += z.im().sign() < 0 ? "-" : "+";
    out += z.im().abs().decimal(12);
    out += "i";
    return out;
}

json report_to_json(const VerificationReport& r)
{
    json j;
    j["command"] = "verify";
    j["params"] = {{"p", r.p}, {"chi", r.character}, {"kind", r.kind}, {"nmax", r.nmax}};
    j["outcome"] = r.passed() ? "pass" : "fail";
    if (r.failure)
        j["first_failure"] = {{"n", r.failure->n}, {"lhs", r.failure->lhs.str()}, {"rhs", r.failure->rhs.str()}};
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

VerificationReport report_from_json(const json& j)
{
    try {
        VerificationReport r;
        const json& params = j.at("params");
        r.p = params.at("p").get<u64>();
        r.character = params.at("chi").get<std::string>();
        r.kind = params.at("kind").get<std::string>();
        r.nmax = params.at("nmax").get<u64>();
        std::string outcome = j.at("outcome").get<std::string>();
        if (outcome == "fail") {
            const json& f = j.at("first_failure");
            r.failure = Failure{f.at("n").get<u64>(), GaussianRational::parse(f.at("lhs").get<std::string>()),
                                GaussianRational::parse(f.at("rhs").get<std::string>())};
        } else if (outcome != "pass") {
            throw std::invalid_argument("unknown outcome '" + outcome + "'");
        }
        r.elapsed_ms = j.at("elapsed_ms").get<long long>();
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("report_from_json: ") + e.what());
    }
}

std::string report_to_text(const VerificationReport& r)
{
    std::ostringstream os;
    os << "identity " << r.kind << " p=" << r.p << " chi=" << r.character << " nmax=" << r.nmax << ": "
       << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (r.failure)
        os << "first failure at n=" << r.failure->n << "\n  lhs = " << r.failure->lhs.str()
           << "\n  rhs = " << r.failure->rhs.str() << "\n";
    os << "elapsed_ms=" << r.elapsed_ms << "\n";
    return os.str();
}

std::string report_to_csv(const VerificationReport& r)
{
    std::ostringstream os;
    os << "p,chi,kind,nmax,outcome,fail_n,lhs,rhs,elapsed_ms\n";
    os << r.p << ',' << r.character << ',' << r.kind << ',' << r.nmax << ',' << (r.passed() ? "pass" : "fail")
       << ',';
    if (r.failure)
        os << r.failure->n << ',' << r.failure->lhs.str() << ',' << r.failure->rhs.str();
    else
        os << ",,";
    os << ',' << r.elapsed_ms << '\n';
    return os.str();
}

std::string asymptotic_to_csv(const AsymptoticReport& rep)
{
    std::ostringstream os;
    os << "n,kron,lhs,rhs,ratio,ratio_dec\n";
    for (const auto& row : rep.rows) {
        os << row.n << ',' << row.kron << ',' << exact_string(row.lhs) << ',' << exact_string(row.rhs) << ','
           << exact_string(row.ratio) << ',' << decimal_string(row.ratio) << '\n';
    }
    return os.str();
}

json asymptotic_to_json(const AsymptoticReport& rep)
{
    json j;
    j["command"] = "asympt";
    j["params"] = {{"p", rep.p}, {"kind", to_string(rep.kind)}, {"nmax", rep.nmax}};
    j["outcome"] = "ok";
    json summary;
    summary["decile_start"] = rep.decile_start;
    if (rep.kind == IdentityKind::conv) {
        summary["alpha"] = rep.alpha.str();
        summary["max_deviation_top_decile"] = rep.max_deviation.str();
    } else {
        summary["alpha_prime"] = exact_string(rep.alpha_prime);
        summary["limit_plus"] = exact_string(rep.limit_plus);
        summary["limit_minus"] = exact_string(rep.limit_minus);
        summary["gamma"] = exact_string(rep.gamma);
        summary["alpha_prime_check"] = exact_string(rep.alpha_prime_check);
    }
    j["summary"] = summary;
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"n", row.n},
                        {"kron", row.kron},
                        {"lhs", exact_string(row.lhs)},
                        {"rhs", exact_string(row.rhs)},
                        {"ratio", exact_string(row.ratio)},
                        {"ratio_dec", decimal_string(row.ratio)}});
    j["rows"] = std::move(rows);
    return j;
}

json obstruction_to_json(const EvenObstructionReport& rep)
{
    json j;
    j["command"] = "poly";
    j["params"] = {{"p", rep.p}, {"q", rep.q}};
    j["outcome"] = rep.consistent() && rep.facts.holds() ? "pass" : "fail";
    j["coefficients"] = {{"b0", rep.facts.b0.get_str()},
                         {"b1", rep.facts.b1.get_str()},
                         {"b_p_minus_1", rep.facts.b_pm1.get_str()},
                         {"b_p", rep.facts.b_p.get_str()},
                         {"nonnegative", rep.facts.nonnegative},
                         {"degree", rep.f.degree()},
                         {"other_zero_degrees", rep.facts.other_zero_degrees}};
    j["verdicts"] = {{"two_is_primitive_root", rep.two_is_primitive_root},
                     {"divisible_by_xq_plus_1", rep.divisible_by_plus},
                     {"coprime_with_xq_minus_1", rep.coprime_with_minus}};
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"k", row.k}, {"parity", to_string(row.parity)}, {"order", row.order}, {"zero", row.zero}});
    j["rows"] = std::move(rows);
    return j;
}

std::string obstruction_to_text(const EvenObstructionReport& rep)
{
    std::ostringstream os;
    os << "p=" << rep.p << " q=" << rep.q << "\n";
    os << "b_0=" << rep.facts.b0 << " b_1=" << rep.facts.b1 << " b_" << rep.p - 1 << "=" << rep.facts.b_pm1 << " b_"
       << rep.p << "=" << rep.facts.b_p << "\n";
    os << "nonnegative=" << (rep.facts.nonnegative ? "true" : "false") << " degree=" << rep.f.degree() << "\n";
    if (!rep.facts.other_zero_degrees.empty()) {
        os << "note: other zero coefficients at degrees";
        for (u64 d : rep.facts.other_zero_degrees)
            os << ' ' << d;
        os << "\n";
    }
    os << "two_is_primitive_root=" << (rep.two_is_primitive_root ? "true" : "false") << "\n";
    os << "divisible_by_xq_plus_1=" << (rep.divisible_by_plus ? "true" : "false") << "\n";
    os << "coprime_with_xq_minus_1=" << (rep.coprime_with_minus ? "true" : "false") << "\n";
    os << "k,parity,order,sum\n";
    for (const auto& row : rep.rows)
        os << row.k << ',' << to_string(row.parity) << ',' << row.order << ',' << (row.zero ? "zero" : "nonzero")
           << "\n";
    return os.str();
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out)
            throw IoError("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move report into place at " + path.string());
    }
}

}  // namespace farkas
