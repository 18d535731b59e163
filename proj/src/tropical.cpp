#include "depcalc/tropical.hpp"

#include <cctype>
#include <sstream>

namespace depcalc {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

boost::multiprecision::cpp_int integer(std::string_view digits) {
  return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

Runtime parse_runtime(std::string_view text) {
  const std::string_view t = trim(text);
  if (const auto slash = t.find('/'); slash != std::string_view::npos) {
    const auto num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("bad runtime '" + std::string(text) + "'");
    if (integer(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Runtime(integer(num), integer(den));
  }
  const auto dot = t.find('.');
  const auto whole = t.substr(0, dot);
  const auto frac = dot == std::string_view::npos ? std::string_view{} : t.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac)) || (dot != std::string_view::npos && frac.empty())) {
    throw ParseError("bad runtime '" + std::string(text) + "'");
  }
  Runtime r = whole.empty() ? Runtime(0) : Runtime(integer(whole));
  if (!frac.empty()) {
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    r += Runtime(integer(frac), scale);
  }
  return r;
}

std::vector<Runtime> parse_runtimes(std::string_view text) {
  std::vector<Runtime> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_runtime(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_runtime(const Runtime& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r);
  cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();

  cpp_int rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  const int digits = std::max(twos, fives);
  cpp_int scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  const cpp_int scaled = num * (scale / den);
  std::string s = cpp_int(scaled / scale).str();
  std::string frac = cpp_int(scaled % scale).str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return s + "." + frac;
}

std::string render_gantt(const Schedule<Runtime>& s, const Runtime& resolution,
                         std::span<const std::string> labels) {
  if (resolution <= 0) throw PreconditionError("gantt resolution must be positive");
  const std::size_t n = s.start.size();
  std::vector<std::string> names;
  std::size_t width = 1;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i < labels.size() ? labels[i] : std::to_string(i));
    width = std::max(width, names.back().size());
  }

  Runtime span = s.makespan / resolution;
  std::size_t columns = static_cast<std::size_t>(boost::multiprecision::numerator(span) /
                                                 boost::multiprecision::denominator(span));
  if (Runtime(columns) < span) ++columns;

  std::ostringstream os;
  os << std::string(width, ' ') << " |";
  for (std::size_t c = 0; c < columns; ++c) os << (c % 10 == 0 ? '+' : '-');
  os << "| t = 0.." << format_runtime(s.makespan) << ", 1 column = " << format_runtime(resolution)
     << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << names[i] << std::string(width - names[i].size(), ' ') << " |";
    for (std::size_t c = 0; c < columns; ++c) {
      const Runtime lo = resolution * c, hi = resolution * (c + 1);
      const bool busy = s.start[i] < hi && s.finish[i] > lo && s.finish[i] > s.start[i];
      os << (busy ? '#' : '.');
    }
    os << "| " << format_runtime(s.start[i]) << " -> " << format_runtime(s.finish[i]) << "\n";
  }
  return os.str();
}

}  // namespace depcalc
