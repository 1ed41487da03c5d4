#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "powmean/complex_core.hpp"
#include "powmean/sample.hpp"

namespace powmean {

/// Sample file format: one real per line, '#' starts a comment, blank lines
/// ignored. Parse errors carry the 1-based line number.
Sample read_sample_csv(std::istream& in, const std::string& name = "<input>");
Sample read_sample_file(const std::string& path);
void write_sample_csv(std::ostream& out, const Sample& s);

/// Lossless text form "a+bi" (17 significant digits).
std::string format_complex(Complex z);
/// Short display form (6 significant digits).
std::string format_complex_short(Complex z);

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" and scientific notation in
/// either part.
Complex parse_complex(const std::string& text);

}  // namespace powmean
