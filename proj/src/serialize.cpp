#include "jacobi_periods/serialize.hpp"

#include <sstream>

#include "jacobi_periods/errors.hpp"

namespace jacobi::io {

namespace {

nlohmann::json integer_json(const Integer& z)
{
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw UsageError("bad integer " + j.get<std::string>());
        return z;
    }
    throw UsageError("expected an integer, got " + j.dump());
}

Rational rational_field(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key)) throw UsageError(std::string("missing field ") + key);
    const auto& v = j.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return make_rational(v.get<std::int64_t>());
    throw UsageError(std::string("field ") + key + " must be a rational");
}

std::int64_t scale_field(const nlohmann::json& j)
{
    if (!j.contains("scale") || !j.at("scale").is_number_integer()) throw UsageError("missing integer field scale");
    auto s = j.at("scale").get<std::int64_t>();
    if (s < 1) throw UsageError("scale must be positive");
    return s;
}

const nlohmann::json& terms_field(const nlohmann::json& j)
{
    if (!j.contains("terms") || !j.at("terms").is_array()) throw UsageError("missing array field terms");
    return j.at("terms");
}

}  // namespace

nlohmann::json rational_pair(const Rational& q)
{
    return nlohmann::json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

Rational rational_from_pair(const nlohmann::json& num, const nlohmann::json& den)
{
    Integer d = integer_from_json(den);
    if (d == 0) throw UsageError("zero denominator");
    Rational q(integer_from_json(num), d);
    q.canonicalize();
    return q;
}

nlohmann::json to_json(const fourier::JacobiExpansion& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : f.coeffs()) {
        auto pr = rational_pair(c);
        terms.push_back({key.first, key.second, pr[0], pr[1]});
    }
    return {{"kind", "jacobi"},
            {"weight", to_string(f.weight())},
            {"index", to_string(f.index())},
            {"scale", f.scale()},
            {"qbound", to_string(f.qbound())},
            {"terms", terms}};
}

nlohmann::json to_json(const fourier::QSeries& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [n, c] : f.coeffs()) {
        auto pr = rational_pair(c);
        terms.push_back({n, pr[0], pr[1]});
    }
    return {{"kind", "qseries"},
            {"weight", to_string(f.weight())},
            {"scale", f.scale()},
            {"qbound", to_string(f.qbound())},
            {"terms", terms}};
}

fourier::JacobiExpansion jacobi_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw UsageError("expansion must be a JSON object");
    fourier::JacobiExpansion f(rational_field(j, "weight"), rational_field(j, "index"), scale_field(j),
                               rational_field(j, "qbound"));
    for (const auto& t : terms_field(j)) {
        if (!t.is_array() || t.size() != 4 || !t[0].is_number_integer() || !t[1].is_number_integer())
            throw UsageError("jacobi term must be [n_scaled, r, num, den]");
        f.set_scaled(t[0].get<std::int64_t>(), t[1].get<std::int64_t>(), rational_from_pair(t[2], t[3]));
    }
    return f;
}

fourier::QSeries qseries_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw UsageError("series must be a JSON object");
    fourier::QSeries f(scale_field(j), rational_field(j, "qbound"), rational_field(j, "weight"));
    for (const auto& t : terms_field(j)) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
            throw UsageError("series term must be [n_scaled, num, den]");
        f.set_scaled(t[0].get<std::int64_t>(), rational_from_pair(t[1], t[2]));
    }
    return f;
}

nlohmann::json to_json(const arith::ClassNumberTable& t)
{
    nlohmann::json values = nlohmann::json::array();
    for (std::int64_t N = 0; N <= t.max(); ++N) {
        const Rational& h = t(N);
        if (h == 0) continue;
        auto pr = rational_pair(h);
        values.push_back({N, pr[0], pr[1]});
    }
    return {{"max", t.max()}, {"values", values}};
}

std::string to_csv(const arith::ClassNumberTable& t)
{
    std::ostringstream out;
    out << "N,numerator,denominator\n";
    for (std::int64_t N = 0; N <= t.max(); ++N) {
        const Rational& h = t(N);
        if (h != 0) out << N << ',' << h.get_num().get_str() << ',' << h.get_den().get_str() << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const ring::OrbitVector& v)
{
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& [k, c] : v)
        orbits.push_back({{"matrix", {k.matrix.a, k.matrix.b, k.matrix.c, k.matrix.d}},
                          {"det", k.det},
                          {"x", k.x},
                          {"y", k.y},
                          {"coefficient", c}});
    return {{"orbits", orbits}};
}

}  // namespace jacobi::io
