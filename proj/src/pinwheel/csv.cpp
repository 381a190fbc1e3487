#include "pinwheel/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pinwheel {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string format_rational(const BigRat& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

BigRat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return BigRat(num, den);
}

std::string csv_trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> csv_split(const std::string& line, std::size_t expected,
                                   const char* what) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(csv_trim(field));
    if (out.size() != expected) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(expected) + " fields, got " +
                                    std::to_string(out.size()));
    }
    return out;
}

}  // namespace pinwheel
