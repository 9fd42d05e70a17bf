#include "unimod/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace unimod {

namespace {

double parse_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1); // from_chars rejects leading '+'
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("bad number '" + std::string(s) + "'");
    return v;
}

} // namespace

Complex parse_complex(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty complex token");
    std::string_view s(token);
    const bool has_j = s.back() == 'j' || s.back() == 'J';
    if (has_j) s.remove_suffix(1);
    if (!has_j) return {parse_double(s), 0.0};
    if (s.empty()) return {0.0, 1.0}; // bare "j"

    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        if (s == "+") return {0.0, 1.0};
        if (s == "-") return {0.0, -1.0};
        return {0.0, parse_double(s)}; // pure imaginary, e.g. "2.5j"
    }
    const std::string_view re = s.substr(0, split);
    std::string_view im = s.substr(split);
    if (im == "+") return {parse_double(re), 1.0};
    if (im == "-") return {parse_double(re), -1.0};
    return {parse_double(re), parse_double(im)};
}

std::string format_complex(const Complex& z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
    std::string out(buf);
    std::snprintf(buf, sizeof buf, "%+.17g", z.imag());
    out += buf;
    out += 'j';
    return out;
}

CMat read_matrix(std::istream& in) {
    Eigen::Index n = 0;
    if (!(in >> n) || n < 1)
        throw std::invalid_argument("matrix file: bad or missing order header");
    CMat m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            std::string token;
            if (!(in >> token))
                throw std::invalid_argument("matrix file: missing entry at row " +
                                            std::to_string(r + 1) + " col " + std::to_string(c + 1));
            try {
                m(r, c) = parse_complex(token);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("matrix file: row " + std::to_string(r + 1) + " col " +
                                            std::to_string(c + 1) + ": " + e.what());
            }
        }
    return m;
}

CMat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const CMat& m) {
    out << m.rows() << "\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ' ';
            out << format_complex(m(r, c));
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const CMat& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_matrix(out, m);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace unimod
