#include "farkas/config.hpp"

#include <fstream>
#include <sstream>

#include "farkas/report.hpp"

namespace farkas {

namespace {

std::string gaussian_field(const GaussianRational& z)
{
    auto part = [](const Rational& r) { return r.numerator().get_str() + "/" + r.denominator().get_str(); };
    return part(z.re()) + "," + part(z.im());
}

std::string line_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return std::to_string(line) + ":" + std::to_string(column);
}

class FieldReader {
public:
    explicit FieldReader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& path, const std::string& message) const
    {
        throw ConfigError(source_ + ": field '" + path + "': " + message);
    }

    const json& require(const json& obj, const std::string& key, const std::string& path) const
    {
        if (!obj.is_object())
            fail(path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end())
            fail(path.empty() ? key : path + "." + key, "missing");
        return *it;
    }

    u64 positive_integer(const json& v, const std::string& path) const
    {
        if (!v.is_number_integer() || v.get<i64>() < 1)
            fail(path, "expected a positive integer");
        return v.get<u64>();
    }

    std::string string(const json& v, const std::string& path) const
    {
        if (!v.is_string())
            fail(path, "expected a string");
        return v.get<std::string>();
    }

    GaussianRational gaussian(const json& v, const std::string& path) const
    {
        std::string s = string(v, path);
        try {
            return GaussianRational::parse(s);
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
    }

private:
    std::string source_;
};

}  // namespace

ConfiguredIdentity parse_identity_config(const std::string& text, const std::string& source)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(source + ":" + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON (" +
                          e.what() + ")");
    }
    FieldReader r(source);
    if (!root.is_object())
        r.fail("", "top level must be an object");

    ConfiguredIdentity cfg;
    cfg.p = r.positive_integer(r.require(root, "p", ""), "p");
    if (root.contains("chi")) {
        try {
            cfg.chi = parse_selector(r.string(root["chi"], "chi"));
        } catch (const std::invalid_argument& e) {
            r.fail("chi", e.what());
        }
    }

    const json& terms = r.require(root, "terms", "");
    if (!terms.is_array() || terms.empty())
        r.fail("terms", "expected a non-empty array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string path = "terms[" + std::to_string(i) + "]";
        const json& t = terms[i];
        ConfiguredTerm term;
        term.a = r.gaussian(r.require(t, "A", path), path + ".A");
        term.b = r.positive_integer(r.require(t, "B", path), path + ".B");
        term.c = r.positive_integer(r.require(t, "C", path), path + ".C");
        cfg.terms.push_back(std::move(term));
    }

    const json& rhs = r.require(root, "rhs", "");
    std::string kind = r.string(r.require(rhs, "kind", "rhs"), "rhs.kind");
    if (kind == "sigma_prime")
        cfg.rhs_kind = RhsKind::sigma_prime;
    else if (kind == "tilde_hat")
        cfg.rhs_kind = RhsKind::tilde_hat;
    else
        r.fail("rhs.kind", "expected \"sigma_prime\" or \"tilde_hat\", got \"" + kind + "\"");
    const json& coeffs = r.require(rhs, "coefficients", "rhs");
    if (!coeffs.is_array())
        r.fail("rhs.coefficients", "expected an array");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        cfg.rhs.push_back(r.gaussian(coeffs[i], "rhs.coefficients[" + std::to_string(i) + "]"));

    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return cfg;
}

ConfiguredIdentity load_identity_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_identity_config(buf.str(), path.string());
}

std::string identity_config_to_string(const ConfiguredIdentity& cfg)
{
    json j;
    j["p"] = cfg.p;
    j["chi"] = to_string(cfg.chi);
    json terms = json::array();
    for (const auto& t : cfg.terms)
        terms.push_back({{"A", gaussian_field(t.a)}, {"B", t.b}, {"C", t.c}});
    j["terms"] = std::move(terms);
    json coeffs = json::array();
    for (const auto& c : cfg.rhs)
        coeffs.push_back(gaussian_field(c));
    j["rhs"] = {{"kind", cfg.rhs_kind == RhsKind::sigma_prime ? "sigma_prime" : "tilde_hat"},
                {"coefficients", std::move(coeffs)}};
    return j.dump(2) + "\n";
}

}  // namespace farkas
