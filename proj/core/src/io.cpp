#include "powmean/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace powmean {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& text, const std::string& where) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;  // from_chars rejects '+'
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw validation_error(where + ": cannot parse '" + text +
                           "' as a real number");
  }
  return value;
}

}  // namespace

Sample read_sample_csv(std::istream& in, const std::string& name) {
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::string where = name + ":" + std::to_string(lineno);
    const double v = parse_double(body, where);
    if (!std::isfinite(v)) {
      throw validation_error(where + ": non-finite value");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw validation_error(name + ": no sample values found");
  }
  return Sample(std::move(values));
}

Sample read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open sample file '" + path + "'");
  return read_sample_csv(in, path);
}

void write_sample_csv(std::ostream& out, const Sample& s) {
  char buf[64];
  for (double v : s.values()) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out << buf;
  }
}

namespace {

std::string format_parts(Complex z, const char* fmt) {
  double re_v = z.real();
  if (re_v == 0.0) re_v = 0.0;  // display -0 as 0
  char re[64], im[64];
  std::snprintf(re, sizeof re, fmt, re_v);
  std::snprintf(im, sizeof im, fmt, std::abs(z.imag()));
  const char sign = std::signbit(z.imag()) ? '-' : '+';
  return std::string(re) + sign + im + "i";
}

}  // namespace

std::string format_complex(Complex z) { return format_parts(z, "%.17g"); }

std::string format_complex_short(Complex z) { return format_parts(z, "%.6g"); }

Complex parse_complex(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw validation_error("parse_complex: empty string");
  if (s.back() != 'i') {
    return {parse_double(s, "parse_complex"), 0.0};
  }
  std::string body = s.substr(0, s.size() - 1);
  // split at the last '+' or '-' that is not a leading sign or an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    // pure imaginary: "i", "-i", "2.5i"
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_double(body, "parse_complex")};
  }
  const std::string re_part = body.substr(0, split);
  std::string im_part = body.substr(split);
  if (im_part == "+") {
    im_part = "1";
  } else if (im_part == "-") {
    im_part = "-1";
  }
  return {parse_double(re_part, "parse_complex"),
          parse_double(im_part, "parse_complex")};
}

}  // namespace powmean
