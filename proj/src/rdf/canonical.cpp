#include "nell2rdf/rdf/canonical.hpp"

#include <cctype>
#include <cstdlib>
#include <cstdio>

namespace nell2rdf::rdf {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Error bad(Errc code, std::string_view what, std::string_view input) {
    return Error{code, std::string(what) + ": '" + std::string(input) + "'"};
}

bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr int d[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && leap(y)) return 29;
    return d[m - 1];
}

// Howard Hinnant's days-from-civil / civil-from-days, for timezone shifts.
long long days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const long long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long long>(doe) - 719468;
}

void civil_from_days(long long z, int& y, int& m, int& d) {
    z += 719468;
    const long long era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const long long yr = static_cast<long long>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

}  // namespace

Result<std::string> canonical_integer(std::string_view s) {
    std::string_view rest = s;
    bool neg = false;
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
        neg = rest[0] == '-';
        rest.remove_prefix(1);
    }
    if (!all_digits(rest)) return bad(Errc::InvalidLiteral, "not an integer", s);
    std::size_t i = 0;
    while (i + 1 < rest.size() && rest[i] == '0') ++i;
    std::string digits(rest.substr(i));
    if (neg && digits != "0") return "-" + digits;
    return digits;
}

Result<std::string> canonical_decimal(std::string_view s) {
    std::string_view rest = s;
    bool neg = false;
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
        neg = rest[0] == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) return bad(Errc::InvalidLiteral, "not a decimal", s);
    std::string_view int_part = rest;
    std::string_view frac_part;
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        int_part = rest.substr(0, dot);
        frac_part = rest.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) return bad(Errc::InvalidLiteral, "not a decimal", s);
    if (!int_part.empty() && !all_digits(int_part)) return bad(Errc::InvalidLiteral, "not a decimal", s);
    if (!frac_part.empty() && !all_digits(frac_part)) return bad(Errc::InvalidLiteral, "not a decimal", s);

    std::size_t i = 0;
    while (i + 1 < int_part.size() && int_part[i] == '0') ++i;
    std::string ip = int_part.empty() ? "0" : std::string(int_part.substr(i));
    std::size_t end = frac_part.size();
    while (end > 1 && frac_part[end - 1] == '0') --end;
    std::string fp = frac_part.empty() ? "0" : std::string(frac_part.substr(0, end));
    if (fp.empty()) fp = "0";

    bool zero = true;
    for (char c : ip + fp)
        if (c != '0' && c != '.') zero = false;
    std::string out = ip + "." + fp;
    if (neg && !zero) out.insert(out.begin(), '-');
    return out;
}

Result<std::string> canonical_boolean(std::string_view s) {
    if (s == "true" || s == "1") return std::string("true");
    if (s == "false" || s == "0") return std::string("false");
    return bad(Errc::InvalidLiteral, "not a boolean", s);
}

namespace {

bool parse_ymd(std::string_view s, int& y, int& m, int& d) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) || !all_digits(s.substr(8, 2)))
        return false;
    y = std::atoi(std::string(s.substr(0, 4)).c_str());
    m = std::atoi(std::string(s.substr(5, 2)).c_str());
    d = std::atoi(std::string(s.substr(8, 2)).c_str());
    return m >= 1 && m <= 12 && d >= 1 && d <= days_in_month(y, m);
}

}  // namespace

Result<std::string> canonical_date(std::string_view s) {
    int y, m, d;
    if (!parse_ymd(s, y, m, d)) return bad(Errc::InvalidLiteral, "not a date", s);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, d);
    return std::string(buf);
}

Result<std::string> canonical_datetime(std::string_view s) {
    if (s.size() < 19) return bad(Errc::InvalidLiteral, "not a dateTime", s);
    int y, mo, d;
    if (!parse_ymd(s.substr(0, 10), y, mo, d)) return bad(Errc::InvalidLiteral, "not a dateTime", s);
    if (s[10] != 'T' && s[10] != ' ') return bad(Errc::InvalidLiteral, "not a dateTime", s);
    std::string_view t = s.substr(11);
    if (t.size() < 8 || t[2] != ':' || t[5] != ':' || !all_digits(t.substr(0, 2)) ||
        !all_digits(t.substr(3, 2)) || !all_digits(t.substr(6, 2)))
        return bad(Errc::InvalidLiteral, "not a dateTime", s);
    int hh = std::atoi(std::string(t.substr(0, 2)).c_str());
    int mi = std::atoi(std::string(t.substr(3, 2)).c_str());
    int ss = std::atoi(std::string(t.substr(6, 2)).c_str());
    if (hh > 23 || mi > 59 || ss > 59) return bad(Errc::InvalidLiteral, "not a dateTime", s);
    std::string_view rest = t.substr(8);

    std::string frac;
    if (!rest.empty() && rest[0] == '.') {
        std::size_t i = 1;
        while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
        if (i == 1) return bad(Errc::InvalidLiteral, "not a dateTime", s);
        frac = std::string(rest.substr(1, i - 1));
        rest.remove_prefix(i);
    }
    int off_min = 0;
    if (!rest.empty()) {
        if (rest == "Z") {
            rest = {};
        } else if ((rest[0] == '+' || rest[0] == '-') && rest.size() == 6 && rest[3] == ':' &&
                   all_digits(rest.substr(1, 2)) && all_digits(rest.substr(4, 2))) {
            int oh = std::atoi(std::string(rest.substr(1, 2)).c_str());
            int om = std::atoi(std::string(rest.substr(4, 2)).c_str());
            off_min = (oh * 60 + om) * (rest[0] == '-' ? -1 : 1);
            rest = {};
        } else {
            return bad(Errc::InvalidLiteral, "bad timezone", s);
        }
    }

    // Shift to UTC. No zone given means the value already is UTC.
    long long mins = days_from_civil(y, mo, d) * 1440LL + hh * 60 + mi - off_min;
    long long days = mins >= 0 ? mins / 1440 : -((-mins + 1439) / 1440);
    int rem = static_cast<int>(mins - days * 1440);
    civil_from_days(days, y, mo, d);
    hh = rem / 60;
    mi = rem % 60;

    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", y, mo, d, hh, mi, ss);
    std::string out(buf);
    if (!frac.empty()) out += "." + frac;
    out += "Z";
    return out;
}

Result<std::string> canonical_decimal_in(std::string_view s, double lo, double hi) {
    auto canon = canonical_decimal(s);
    if (!canon.ok()) return canon;
    double v = std::strtod(canon.value().c_str(), nullptr);
    if (v < lo || v > hi)
        return Error{Errc::ProbabilityOutOfRange,
                     "value " + canon.value() + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]"};
    return canon;
}

}  // namespace nell2rdf::rdf
