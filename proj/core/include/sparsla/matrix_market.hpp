#pragma once

#include "sparsla/sparse.hpp"

#include <iosfwd>
#include <string>

namespace sparsla {

/// Reads a Matrix Market coordinate file (real, general or symmetric).
/// Symmetric files are expanded to full storage; indices are converted
/// from the format's 1-based convention. Throws FormatError with the
/// offending line number on malformed input.
SparseCoo read_matrix_market(const std::string& path);
SparseCoo read_matrix_market(std::istream& in);

/// Writes coordinate/real/general with full double precision. Reading the
/// file back reproduces indices exactly and values bit-for-bit.
void write_matrix_market(const SparseCoo& a, const std::string& path);
void write_matrix_market(const SparseCoo& a, std::ostream& out);

} // namespace sparsla
