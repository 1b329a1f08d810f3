#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ga3ph/errors.hpp"
#include "ga3ph/synthesis.hpp"

namespace ga3ph::cli {

namespace {

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double parse_double(const std::string& v, int line) {
  size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &pos);
  } catch (...) {
    throw ParseError("bad numeric value '" + v + "' at line " + std::to_string(line),
                     line);
  }
  if (pos != v.size())
    throw ParseError("bad numeric value '" + v + "' at line " + std::to_string(line),
                     line);
  return out;
}

bool parse_bool(const std::string& v, int line) {
  const std::string s = lower(v);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError("bad boolean value '" + v + "' at line " + std::to_string(line),
                   line);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string raw, section;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find_first_of("#;");
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trimmed(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ParseError("malformed section header at line " + std::to_string(line),
                         line);
      section = lower(trimmed(s.substr(1, s.size() - 2)));
      if (section != "circuit" && section != "source" && section != "sim" &&
          section != "controller")
        throw ParseError("unknown section [" + section + "] at line " +
                             std::to_string(line),
                         line);
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value at line " + std::to_string(line), line);
    const std::string key = lower(trimmed(s.substr(0, eq)));
    const std::string val = trimmed(s.substr(eq + 1));

    if (section == "circuit") {
      if (key == "l") cfg.L = parse_double(val, line);
      else if (key == "lu") cfg.Lu = parse_double(val, line);
      else if (key == "r") cfg.R = parse_double(val, line);
      else if (key == "balanced") cfg.balanced = parse_bool(val, line);
      else
        throw ParseError("unknown key '" + key + "' in [circuit] at line " +
                             std::to_string(line),
                         line);
    } else if (section == "source") {
      if (key == "v") cfg.V = parse_double(val, line);
      else if (key == "freq_hz") cfg.freq_hz = parse_double(val, line);
      else
        throw ParseError("unknown key '" + key + "' in [source] at line " +
                             std::to_string(line),
                         line);
    } else if (section == "sim") {
      if (key == "ts") cfg.Ts = parse_double(val, line);
      else if (key == "duration") cfg.duration = parse_double(val, line);
      else if (key == "substeps") cfg.substeps = static_cast<int>(parse_double(val, line));
      else if (key == "step_time") cfg.step_time = parse_double(val, line);
      else if (key == "step_channel") {
        const std::string c = lower(val);
        if (c == "alpha" || c == "0") cfg.step_channel = 0;
        else if (c == "beta" || c == "1") cfg.step_channel = 1;
        else
          throw ParseError("step_channel must be alpha or beta at line " +
                               std::to_string(line),
                           line);
      } else if (key == "step_magnitude") cfg.step_magnitude = parse_double(val, line);
      else
        throw ParseError("unknown key '" + key + "' in [sim] at line " +
                             std::to_string(line),
                         line);
    } else if (section == "controller") {
      if (key == "type") {
        const std::string t = lower(val);
        if (t != "proportional" && t != "decoupling" && t != "custom")
          throw ParseError("controller type must be proportional, decoupling or "
                           "custom at line " +
                               std::to_string(line),
                           line);
        cfg.controller_type = t;
      } else if (key == "k") cfg.k = parse_double(val, line);
      else if (key == "c0") cfg.c0 = val;
      else if (key == "c1") cfg.c1 = val;
      else if (key == "c2") cfg.c2 = val;
      else if (key == "c3") cfg.c3 = val;
      else
        throw ParseError("unknown key '" + key + "' in [controller] at line " +
                             std::to_string(line),
                         line);
    } else {
      throw ParseError("key outside of any section at line " + std::to_string(line),
                       line);
    }
  }
  if (!(cfg.L > 0) || !(cfg.Lu > 0) || !(cfg.R > 0) || !(cfg.V > 0) ||
      !(cfg.freq_hz > 0) || !(cfg.Ts > 0) || !(cfg.duration > 0) || cfg.substeps < 1)
    throw ParseError("physical configuration values must be positive", line);
  return cfg;
}

RatFun parse_ratfun_text(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_poly = [](const std::string& part) {
    std::istringstream is(part);
    std::vector<double> c;
    double v;
    while (is >> v) c.push_back(v);
    if (c.empty()) throw ParseError("empty polynomial in coefficient entry", 0);
    return Poly(std::move(c));
  };
  if (slash == std::string::npos) return RatFun(parse_poly(text), Poly::one());
  return RatFun(parse_poly(text.substr(0, slash)), parse_poly(text.substr(slash + 1)));
}

GaTf build_controller(const RunConfig& cfg, const GaTf& plant) {
  if (cfg.controller_type == "proportional") {
    return GaTf(Multivector<Poly>{Poly{cfg.k}, Poly{cfg.k}, Poly::zero(), Poly::zero()},
                Poly::one());
  }
  if (cfg.controller_type == "decoupling") {
    return youla_controller(plant, decoupling_q(plant));
  }
  Multivector<RatFun> mv;
  mv.c0 = cfg.c0.empty() ? RatFun::zero() : parse_ratfun_text(cfg.c0);
  mv.c1 = cfg.c1.empty() ? RatFun::zero() : parse_ratfun_text(cfg.c1);
  mv.c2 = cfg.c2.empty() ? RatFun::zero() : parse_ratfun_text(cfg.c2);
  mv.c12 = cfg.c3.empty() ? RatFun::zero() : parse_ratfun_text(cfg.c3);
  return GaTf::from_ratfun_mv(mv);
}

}  // namespace ga3ph::cli
