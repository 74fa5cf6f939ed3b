#include "qzeta/quaternion.hpp"

#include <array>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace qzeta {

Quaternion parse_quaternion(const std::string& text) {
    std::array<double, 4> comp{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t next = text.find(',', pos);
        const bool last = (i == 3);
        if (last != (next == std::string::npos)) {
            throw ParseError("quaternion literal must be four comma-separated reals: '" +
                             text + "'");
        }
        const std::string field =
            text.substr(pos, last ? std::string::npos : next - pos);
        std::size_t used = 0;
        try {
            comp[i] = std::stod(field, &used);
        } catch (const std::exception&) {
            throw ParseError("bad real component '" + field + "' in quaternion '" +
                             text + "'");
        }
        while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
            ++used;
        if (used != field.size()) {
            throw ParseError("trailing characters in quaternion component '" + field +
                             "'");
        }
        pos = next + 1;
    }
    Quaternion q{comp[0], comp[1], comp[2], comp[3]};
    if (!q.is_finite()) {
        throw ParseError("non-finite quaternion literal '" + text + "'");
    }
    return q;
}

std::string to_string(const Quaternion& q) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g", q.x0, q.x1, q.x2,
                  q.x3);
    return buf;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << to_string(q);
}

} // namespace qzeta
