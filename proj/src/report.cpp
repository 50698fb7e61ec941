#include "qracah/report.hpp"

#include <sstream>

namespace qracah {

namespace {
// All strings we emit are plain ASCII identifiers and fractions; escape
// anyway so a hostile fingerprint cannot break the stream.
void append_escaped(std::ostream& os, const std::string& s) {
    os << '"';
    for (char ch : s) {
        switch (ch) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default: os << ch;
        }
    }
    os << '"';
}
}  // namespace

std::string IdentityReport::to_json(bool with_timing) const {
    std::ostringstream os;
    os << "{\"suite\":";
    append_escaped(os, suite);
    os << ",\"identity\":";
    append_escaped(os, identity);
    os << ",\"params\":";
    append_escaped(os, params);
    os << ",\"pass\":" << (pass ? "true" : "false");
    if (first_failure) {
        os << ",\"first_failure\":[";
        for (size_t i = 0; i < first_failure->size(); ++i) {
            if (i) os << ',';
            os << (*first_failure)[i];
        }
        os << ']';
    }
    if (residual) {
        os << ",\"residual\":";
        append_escaped(os, residual->str());
    }
    if (with_timing) {
        os << ",\"wall_time\":" << wall_time;
    }
    os << '}';
    return os.str();
}

}  // namespace qracah
