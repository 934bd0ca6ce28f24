#include "jetpva/report.hpp"

#include <algorithm>
#include <sstream>

namespace jetpva {

namespace {

std::string d_token(const std::vector<int> &d)
{
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

std::string sanitize(const std::string &s)
{
    std::string out;
    for (char c : s)
        out += (c == ' ' ? '-' : c);
    return out;
}

} // namespace

std::string emit_report(const Report &r, bool machine)
{
    std::ostringstream os;
    if (machine) {
        for (const auto &b : r.blocks)
            os << "block deg=" << b.deg << " w=" << b.w << " d=" << d_token(b.d) << " dim=" << b.dim
               << " hdim=" << b.hdim << "\n";
        for (const auto &c : r.checks) {
            os << "check " << sanitize(c.name) << " " << (c.pass ? "pass" : "fail");
            if (!c.detail.empty())
                os << " detail=" << sanitize(c.detail);
            os << "\n";
        }
        if (r.verdict)
            os << "verdict " << (*r.verdict ? "PASS" : "FAIL") << "\n";
        return os.str();
    }

    for (const auto &line : r.info)
        os << line << "\n";
    if (!r.blocks.empty()) {
        size_t dwidth = 1;
        for (const auto &b : r.blocks)
            dwidth = std::max(dwidth, d_token(b.d).size());
        os << "  deg  w  " << std::string(dwidth > 1 ? dwidth - 1 : 1, ' ') << "d"
           << "   dim  hdim\n";
        for (const auto &b : r.blocks) {
            std::string dt = d_token(b.d);
            os << "  " << b.deg << "    " << b.w << "  " << std::string(dwidth - dt.size(), ' ') << dt
               << "   " << b.dim << "    " << b.hdim << "\n";
        }
    }
    for (const auto &c : r.checks) {
        os << "check " << c.name << ": " << (c.pass ? "pass" : "fail");
        if (!c.detail.empty())
            os << " (" << c.detail << ")";
        os << "\n";
    }
    if (r.verdict)
        os << "verdict " << (*r.verdict ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace jetpva
