#include "bipramsey/rational.hpp"

#include "bipramsey/error.hpp"
#include "bipramsey/random.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace bipramsey {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidSize: return "invalid-size";
    case ErrorCode::SizeLimit: return "size-limit";
    case ErrorCode::InvalidColour: return "invalid-colour";
    case ErrorCode::Structural: return "structural";
    case ErrorCode::DegeneratePair: return "degenerate-pair";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::SliceFailure: return "slice-failure";
    case ErrorCode::Partition: return "partition";
    case ErrorCode::NoShape: return "no-shape";
    case ErrorCode::Divisibility: return "divisibility";
    case ErrorCode::Parameter: return "parameter";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Io: return "io";
    }
    return "unknown";
}

namespace {

BigInt parse_digits(std::string_view s, std::string_view whole) {
    require(!s.empty(), ErrorCode::Parse, "malformed number '" + std::string(whole) + "'");
    BigInt v = 0;
    for (char c : s) {
        require(std::isdigit(static_cast<unsigned char>(c)) != 0, ErrorCode::Parse,
                "malformed number '" + std::string(whole) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

BigInt pow10(long e) {
    BigInt p = 1;
    for (long i = 0; i < e; ++i)
        p *= 10;
    return p;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        require(exp_part.size() <= 4, ErrorCode::Parse, "exponent too large in '" + std::string(whole) + "'");
        exponent = static_cast<long>(parse_digits(exp_part, whole));
        if (exp_negative)
            exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        require(!int_part.empty() || !frac_part.empty(), ErrorCode::Parse,
                "malformed number '" + std::string(whole) + "'");
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        digits = std::string(s);
    }
    Rational value(parse_digits(digits, whole));
    if (exponent > 0)
        value *= pow10(exponent);
    else if (exponent < 0)
        value /= pow10(-exponent);
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    require(!text.empty(), ErrorCode::Parse, "empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_decimal(text.substr(0, slash), text);
        Rational den = parse_decimal(text.substr(slash + 1), text);
        require(den != 0, ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
        return num / den;
    }
    return parse_decimal(text, text);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt floor(const Rational& q) {
    BigInt n = numerator(q);
    BigInt d = denominator(q);
    BigInt quotient = n / d;
    if (n % d != 0 && n < 0)
        quotient -= 1;
    return quotient;
}

BigInt ceil(const Rational& q) {
    BigInt f = floor(q);
    return Rational(f) == q ? f : BigInt(f + 1);
}

namespace {
std::int64_t narrow(const BigInt& v) {
    require(v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min(),
            ErrorCode::Parameter, "value " + v.str() + " exceeds machine range");
    return v.convert_to<std::int64_t>();
}
}  // namespace

std::int64_t ceil_to_int(const Rational& q) { return narrow(ceil(q)); }
std::int64_t floor_to_int(const Rational& q) { return narrow(floor(q)); }

SmallFraction small_fraction(const Rational& q) {
    const std::int64_t limit = std::int64_t{1} << 40;
    require(q >= 0 && numerator(q) < limit && denominator(q) < limit, ErrorCode::Parameter,
            "rational " + to_string(q) + " too fine for the integer kernels");
    return {numerator(q).convert_to<std::int64_t>(), denominator(q).convert_to<std::int64_t>()};
}

std::vector<int> random_subset(Rng& rng, int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i)
        std::swap(pool[static_cast<std::size_t>(i)],
                  pool[static_cast<std::size_t>(i) + uniform_below(rng, static_cast<std::uint64_t>(n - i))]);
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace bipramsey
