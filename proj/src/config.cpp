#include "viscomem/config.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace viscomem {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_plain(std::string_view text) {
  const std::string s = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw ConfigError("not a number: '" + s + "'");
  return v;
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

using Entries = std::map<std::string, std::map<std::string, std::string>>;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"mesh", {"dim", "M", "mass"}},
      {"time", {"N", "T"}},
      {"kernel", {"type", "alpha", "sigma", "gamma", "value", "enforce_range"}},
      {"damping", {"function", "constant", "mu1", "mu2"}},
      {"problem", {"preset", "forcing"}},
      {"output", {"dir", "energy", "trajectory_every"}},
  };
  return s;
}

Entries read_entries(std::string_view text) {
  Entries entries;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (const auto c = line.find_first_of("#;"); c != std::string::npos) line.erase(c);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      std::ostringstream msg;
      msg << "config line " << line_no << ": " << why;
      throw ConfigError(msg.str());
    };
    if (line.front() == '[') {
      if (line.back() != ']') fail("malformed section header '" + line + "'");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!schema().count(section)) fail("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value, got '" + line + "'");
    if (section.empty()) fail("key outside of any section");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!schema().at(section).count(key)) fail("unknown key '" + key + "' in [" + section + "]");
    if (entries[section].count(key)) fail("duplicate key '" + key + "' in [" + section + "]");
    entries[section][key] = value;
  }
  return entries;
}

class Reader {
 public:
  explicit Reader(Entries e) : entries_(std::move(e)) {}

  const std::string* find(const std::string& section, const std::string& key) const {
    auto s = entries_.find(section);
    if (s == entries_.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }

  template <class Fn>
  void with(const std::string& section, const std::string& key, Fn&& fn) const {
    if (const std::string* v = find(section, key)) {
      try {
        fn(*v);
      } catch (const std::exception& e) {
        throw ConfigError(section + "." + key + ": " + e.what());
      }
    }
  }

 private:
  Entries entries_;
};

long parse_integer(const std::string& s) {
  const double v = parse_plain(s);
  if (v != std::floor(v)) throw ConfigError("expected an integer, got '" + s + "'");
  return static_cast<long>(v);
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("expected true or false, got '" + s + "'");
}

}  // namespace

const char* to_string(Preset preset) {
  switch (preset) {
    case Preset::paper_1d:
      return "paper_1d";
    case Preset::paper_2d:
      return "paper_2d";
    case Preset::manufactured:
      return "manufactured";
    case Preset::zero:
      return "zero";
  }
  return "unknown";
}

Preset preset_from_string(const std::string& name) {
  if (name == "paper_1d") return Preset::paper_1d;
  if (name == "paper_2d") return Preset::paper_2d;
  if (name == "manufactured") return Preset::manufactured;
  if (name == "zero") return Preset::zero;
  throw ConfigError("unknown preset '" + name +
                    "' (expected paper_1d, paper_2d, manufactured or zero)");
}

double parse_number(std::string_view text) {
  const std::string s = trim(text);
  const auto open = s.find("sqrt(");
  if (open == std::string::npos) return parse_plain(s);
  if (s.back() != ')') throw ConfigError("malformed sqrt expression '" + s + "'");
  const double radicand = parse_plain(std::string_view(s).substr(open + 5, s.size() - open - 6));
  double factor = 1.0;
  if (open > 0) {
    const std::string head = trim(std::string_view(s).substr(0, open));
    if (head.empty() || head.back() != '*')
      throw ConfigError("malformed sqrt expression '" + s + "'");
    factor = parse_plain(std::string_view(head).substr(0, head.size() - 1));
  }
  return factor * std::sqrt(radicand);
}

void RunConfig::validate() const {
  auto fail = [](const std::string& field, const std::string& why) {
    throw ConfigError(field + ": " + why);
  };
  if (dim != 1 && dim != 2) fail("mesh.dim", "must be 1 or 2");
  if (M < 2) fail("mesh.M", "must be at least 2");
  if (N < 1) fail("time.N", "must be at least 1");
  if (!(T > 0.0) || !std::isfinite(T)) fail("time.T", "must be positive and finite");
  if (kernel_kind == KernelKind::tempered) {
    try {
      kernel.validate();
    } catch (const std::invalid_argument& e) {
      fail("kernel", e.what());
    }
  } else if (!std::isfinite(kernel_constant)) {
    fail("kernel.value", "must be finite");
  }
  try {
    damping.validate();
  } catch (const std::invalid_argument& e) {
    fail("damping", e.what());
  }
  if ((preset == Preset::paper_1d || preset == Preset::manufactured) && dim != 1)
    fail("problem.preset", std::string(to_string(preset)) + " requires mesh.dim = 1");
  if (preset == Preset::paper_2d && dim != 2)
    fail("problem.preset", "paper_2d requires mesh.dim = 2");
  if ((preset == Preset::paper_1d || preset == Preset::paper_2d) &&
      kernel_kind != KernelKind::tempered)
    fail("kernel.type", std::string(to_string(preset)) + " requires kernel.type = tempered");
}

RunConfig parse_config(std::string_view text) {
  const Reader r(read_entries(text));
  RunConfig c;
  r.with("mesh", "dim", [&](const std::string& v) { c.dim = static_cast<int>(parse_integer(v)); });
  r.with("mesh", "M", [&](const std::string& v) { c.M = static_cast<int>(parse_integer(v)); });
  r.with("mesh", "mass", [&](const std::string& v) { c.mass = mass_matrix_from_string(v); });
  r.with("time", "N", [&](const std::string& v) {
    const long n = parse_integer(v);
    if (n < 1) throw ConfigError("must be at least 1");
    c.N = static_cast<std::size_t>(n);
  });
  r.with("time", "T", [&](const std::string& v) { c.T = parse_number(v); });
  r.with("kernel", "type", [&](const std::string& v) {
    if (v == "tempered") {
      c.kernel_kind = KernelKind::tempered;
    } else if (v == "constant") {
      c.kernel_kind = KernelKind::constant;
    } else {
      throw ConfigError("expected tempered or constant, got '" + v + "'");
    }
  });
  r.with("kernel", "alpha", [&](const std::string& v) { c.kernel.alpha = parse_number(v); });
  r.with("kernel", "sigma", [&](const std::string& v) { c.kernel.sigma = parse_number(v); });
  r.with("kernel", "gamma", [&](const std::string& v) { c.kernel.gamma = parse_number(v); });
  r.with("kernel", "enforce_range",
         [&](const std::string& v) { c.kernel.enforce_range = parse_bool(v); });
  r.with("kernel", "value", [&](const std::string& v) { c.kernel_constant = parse_number(v); });

  r.with("damping", "function",
         [&](const std::string& v) { c.damping.kind = damping_kind_from_string(v); });
  r.with("damping", "constant", [&](const std::string& v) { c.damping.constant = parse_number(v); });
  r.with("damping", "mu1", [&](const std::string& v) { c.damping.mu1 = parse_number(v); });
  r.with("damping", "mu2", [&](const std::string& v) { c.damping.mu2 = parse_number(v); });

  r.with("problem", "preset", [&](const std::string& v) { c.preset = preset_from_string(v); });
  r.with("problem", "forcing", [&](const std::string& v) { c.forcing = parse_bool(v); });

  r.with("output", "dir", [&](const std::string& v) { c.output_dir = v; });
  r.with("output", "energy", [&](const std::string& v) { c.write_energy = parse_bool(v); });
  r.with("output", "trajectory_every", [&](const std::string& v) {
    const long n = parse_integer(v);
    if (n < 0) throw ConfigError("must be nonnegative");
    c.trajectory_every = static_cast<std::size_t>(n);
  });
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string serialize(const RunConfig& c) {
  std::ostringstream out;
  out << "[mesh]\n"
      << "dim = " << c.dim << "\n"
      << "M = " << c.M << "\n"
      << "mass = " << to_string(c.mass) << "\n\n"
      << "[time]\n"
      << "N = " << c.N << "\n"
      << "T = " << format_double(c.T) << "\n\n"
      << "[kernel]\n"
      << "type = " << (c.kernel_kind == KernelKind::tempered ? "tempered" : "constant") << "\n"
      << "alpha = " << format_double(c.kernel.alpha) << "\n"
      << "sigma = " << format_double(c.kernel.sigma) << "\n"
      << "gamma = " << format_double(c.kernel.gamma) << "\n"
      << "value = " << format_double(c.kernel_constant) << "\n"
      << "enforce_range = " << (c.kernel.enforce_range ? "true" : "false") << "\n\n"
      << "[damping]\n"
      << "function = " << to_string(c.damping.kind) << "\n"
      << "constant = " << format_double(c.damping.constant) << "\n"
      << "mu1 = " << format_double(c.damping.mu1) << "\n"
      << "mu2 = " << format_double(c.damping.mu2) << "\n\n"
      << "[problem]\n"
      << "preset = " << to_string(c.preset) << "\n"
      << "forcing = " << (c.forcing ? "true" : "false") << "\n\n"
      << "[output]\n"
      << "dir = " << c.output_dir << "\n"
      << "energy = " << (c.write_energy ? "true" : "false") << "\n"
      << "trajectory_every = " << c.trajectory_every << "\n";
  return out.str();
}

}  // namespace viscomem
