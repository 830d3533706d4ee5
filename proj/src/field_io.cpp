#include "relgs/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace relgs {

void write_field(std::ostream& os, const RealField& u) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "RELGS-FIELD v1 N=%d n=%d L=%.17g\n", u.grid.dim(),
                  u.grid.n(), u.grid.length());
    os << buf;
    for (double v : u.values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        os << buf;
    }
}

void write_field(const std::string& path, const RealField& u) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_field: cannot open " + path);
    write_field(os, u);
    if (!os) throw std::runtime_error("write_field: write failed for " + path);
}

RealField read_field(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("read_field: empty stream");
    int N = 0, n = 0;
    double L = 0.0;
    if (std::sscanf(line.c_str(), "RELGS-FIELD v1 N=%d n=%d L=%lf", &N, &n, &L) != 3)
        throw std::runtime_error("read_field: bad header: " + line);
    Grid g(N, n, L);
    std::vector<double> vals;
    vals.reserve(g.size());
    double v;
    while (is >> v) vals.push_back(v);
    if (vals.size() != g.size())
        throw std::runtime_error("read_field: expected " + std::to_string(g.size()) +
                                 " values, got " + std::to_string(vals.size()));
    return RealField(g, std::move(vals));
}

RealField read_field(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_field: cannot open " + path);
    return read_field(is);
}

}  // namespace relgs
