#include "hq8/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "hq8/error.hpp"

namespace hq8 {
namespace {

[[noreturn]] void parse_error(int line, const std::string& why) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + why);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool to_int(std::string_view s, int& out) {
  s = trim(s);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

GeneratorFile parse_generator_file(std::string_view text) {
  GeneratorFile out;
  bool have_header = false;
  int number = 0;
  for (std::string_view raw : lines_of(text)) {
    ++number;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      std::istringstream is{std::string(line)};
      std::string word;
      int k[3];
      if (!(is >> word) || word != "space" || !(is >> k[0] >> k[1] >> k[2]))
        parse_error(number, "expected header `space k1 k2 k3`");
      if (std::string rest; is >> rest) parse_error(number, "trailing text after header");
      if (k[0] < 0 || k[1] < 0 || k[2] < 0) parse_error(number, "negative block size");
      out.space = {k[0], k[1], k[2]};
      have_header = true;
      continue;
    }
    try {
      out.generators.push_back(parse_element(out.space, line));
    } catch (const Error& e) {
      parse_error(number, e.what());
    }
  }
  if (!have_header) parse_error(number, "missing header `space k1 k2 k3`");
  return out;
}

std::string format_generator_file(const AmbientSpace& space, std::span<const GroupElement> generators) {
  std::ostringstream os;
  os << "space " << space.k1 << ' ' << space.k2 << ' ' << space.k3 << '\n';
  for (const auto& g : generators) os << to_string(g) << '\n';
  return os.str();
}

std::string format_binary_export(const CodeGroup& group) {
  const BinaryCode code = BinaryCode::from_group(group);
  std::string out;
  for (const auto& w : code.words()) {
    out += w.to_string();
    out += '\n';
  }
  return out;
}

ConstructionPlan parse_plan(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  int number = 0;
  for (std::string_view raw : lines_of(text)) {
    ++number;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(number, "expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    if (!kv.emplace(key, std::string(trim(line.substr(eq + 1)))).second) parse_error(number, "duplicate key " + key);
  }
  ConstructionPlan plan;
  const auto need_int = [&](const char* key, int& out) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorCode::Parse, std::string("plan is missing ") + key);
    if (!to_int(it->second, out)) throw Error(ErrorCode::Parse, std::string("plan key ") + key + " is not an integer");
  };
  need_int("m", plan.m);
  need_int("sigma", plan.sigma);
  need_int("tau", plan.tau);
  need_int("k", plan.target_k);
  need_int("r", plan.target_r);
  const auto shape = kv.find("shape");
  if (shape == kv.end()) throw Error(ErrorCode::Parse, "plan is missing shape");
  const auto parsed = parse_shape(shape->second);
  if (!parsed) throw Error(ErrorCode::Parse, "unknown shape " + shape->second);
  plan.shape = *parsed;
  if (const auto dial = kv.find("dial"); dial != kv.end()) plan.dial = parse_index_list(dial->second);
  for (const auto& [key, value] : kv) {
    static constexpr std::string_view known[] = {"m", "shape", "sigma", "tau", "k", "r", "dial"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw Error(ErrorCode::Parse, "unknown plan key " + key);
  }
  return plan;
}

std::string format_plan(const ConstructionPlan& plan) {
  std::ostringstream os;
  os << "m=" << plan.m << "\nshape=" << shape_label(plan.shape) << "\nsigma=" << plan.sigma << "\ntau=" << plan.tau
     << "\nk=" << plan.target_k << "\nr=" << plan.target_r << "\ndial=";
  for (std::size_t i = 0; i < plan.dial.size(); ++i) os << (i ? "," : "") << plan.dial[i];
  os << '\n';
  return os.str();
}

std::string format_pairs_table(int m) {
  std::ostringstream os;
  os << "# m=" << m << " n=" << (1LL << m) << "\n";
  os << "# shape tau sigma: (k,r)[case] ...\n";
  for (Shape shape : kAllShapes) {
    for (int tau = 0; tau <= m; ++tau) {
      if (!table3_exists(shape, m, tau)) continue;
      const int sigma = m + 1 - tau - shape_upsilon(shape);
      os << shape_label(shape) << ' ' << tau << ' ' << sigma << ':';
      for (const auto& p : allowable_pairs(m, shape, sigma, tau)) os << " (" << p.k << ',' << p.r << ")[" << p.case_tag << ']';
      os << '\n';
    }
  }
  return os.str();
}

std::vector<int> parse_index_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int v = 0;
    if (!to_int(item, v) || v < 0) throw Error(ErrorCode::Parse, "bad index `" + std::string(trim(item)) + "`");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace hq8
