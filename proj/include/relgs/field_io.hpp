#pragma once

#include <iosfwd>
#include <string>

#include "relgs/grid.hpp"

namespace relgs {

/// Text field dump, one value per line at 17 significant digits, row-major,
/// after the header line
///   RELGS-FIELD v1 N=<N> n=<n_per_dim> L=<box_length>
void write_field(std::ostream& os, const RealField& u);
void write_field(const std::string& path, const RealField& u);

RealField read_field(std::istream& is);
RealField read_field(const std::string& path);

}  // namespace relgs
