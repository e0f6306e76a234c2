#pragma once

// Internal helpers for the flat-text artifact formats and CSV output.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "facekit/types.hpp"

namespace facekit::detail {

/// Shortest-round-trip formatting: 17 significant digits always reproduce
/// the exact double on parse.
inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_vector_line(std::ostream& out, const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) out << ' ';
        out << fmt(v[i]);
    }
    out << '\n';
}

inline Vector parse_vector_line(const std::string& line, Eigen::Index expected,
                                const std::string& what) {
    std::istringstream iss(line);
    std::vector<double> vals;
    double d = 0.0;
    while (iss >> d) vals.push_back(d);
    if (expected >= 0 && static_cast<Eigen::Index>(vals.size()) != expected) {
        throw FormatError(what + ": expected " + std::to_string(expected) +
                          " values, got " + std::to_string(vals.size()));
    }
    return Eigen::Map<const Vector>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

inline std::string read_line(std::istream& in, const std::string& what) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError(what + ": unexpected end of file");
    return line;
}

inline std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

inline std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    return in;
}

}  // namespace facekit::detail
