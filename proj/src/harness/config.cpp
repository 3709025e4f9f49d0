#include "metaprox/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "metaprox/errors.hpp"

namespace metaprox::harness {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

double to_double(std::string_view text, const std::string& key) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(key + ": expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

std::size_t to_size(std::string_view text, const std::string& key) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(key + ": expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> to_doubles(std::string_view text, const std::string& key) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(to_double(part, key));
  return out;
}

std::string fmt(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fmt(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += fmt(values[i]);
  }
  return out;
}

// Keys are consumed as they are read so that leftovers can be reported.
class Table {
 public:
  explicit Table(const KeyValues& kv) {
    for (const auto& [k, v] : kv) {
      if (!values_.emplace(k, v).second) throw ConfigError("duplicate key '" + k + "'");
    }
  }

  std::optional<std::string> take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string v = it->second;
    values_.erase(it);
    return v;
  }

  std::string require(const std::string& key) {
    auto v = take(key);
    if (!v) throw ConfigError("missing key '" + key + "'");
    return *v;
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  void finish() const {
    if (!values_.empty()) throw ConfigError("unknown key '" + values_.begin()->first + "'");
  }

 private:
  std::map<std::string, std::string> values_;
};

Point read_point(Table& t, const std::string& prefix, ModelKind model, std::size_t dim) {
  try {
    if (model == ModelKind::HalfPlane) {
      const double x = to_double(t.require(prefix + ".x"), prefix + ".x");
      const double y = to_double(t.require(prefix + ".y"), prefix + ".y");
      return geometry::half_plane(x, y);
    }
    auto coords = to_doubles(t.require(prefix + ".coords"), prefix + ".coords");
    if (coords.size() != dim) {
      throw ConfigError(prefix + ".coords: expected " + std::to_string(dim) + " coordinates");
    }
    return geometry::euclidean(std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(prefix + ": " + e.what());
  }
}

// Reads whichever point encoding is present; used where the model is not known.
std::optional<Point> read_any_point(Table& t, const std::string& prefix) {
  if (t.has(prefix + ".coords")) {
    auto coords = to_doubles(t.require(prefix + ".coords"), prefix + ".coords");
    return geometry::euclidean(std::move(coords));
  }
  if (t.has(prefix + ".x") || t.has(prefix + ".y")) {
    return read_point(t, prefix, ModelKind::HalfPlane, 2);
  }
  return std::nullopt;
}

void write_point(std::ostringstream& os, const std::string& prefix, const Point& p) {
  if (geometry::is_half_plane(p)) {
    const auto& h = geometry::as_half_plane(p);
    os << prefix << ".x = " << fmt(h.x) << '\n' << prefix << ".y = " << fmt(h.y) << '\n';
  } else {
    os << prefix << ".coords = " << fmt(geometry::as_euclidean(p).coords) << '\n';
  }
}

Geodesic read_target(Table& t) {
  const std::string kind = t.require("family.target");
  const double a = to_double(t.require("family.a"), "family.a");
  if (kind == "ray") return geometry::vertical_ray(a);
  if (kind == "semicircle") {
    try {
      return geometry::semicircle(a, to_double(t.require("family.r"), "family.r"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("family.r: ") + e.what());
    }
  }
  throw ConfigError("family.target must be 'ray' or 'semicircle'");
}

void write_target(std::ostringstream& os, const Geodesic& g) {
  if (const auto* s = std::get_if<geometry::Semicircle>(&g)) {
    os << "family.target = semicircle\nfamily.a = " << fmt(s->a) << "\nfamily.r = " << fmt(s->r)
       << '\n';
  } else {
    os << "family.target = ray\nfamily.a = " << fmt(std::get<geometry::VerticalRay>(g).a) << '\n';
  }
}

}  // namespace

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
    }
    out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

ExperimentConfig parse_config(std::string_view text) {
  Table t(parse_key_values(text));
  ExperimentConfig cfg;

  const std::string model = t.require("model.kind");
  if (model == "halfplane") {
    cfg.model = ModelKind::HalfPlane;
    cfg.dim = 2;
  } else if (model == "euclidean") {
    cfg.model = ModelKind::Euclidean;
    cfg.dim = to_size(t.require("model.dim"), "model.dim");
    if (cfg.dim == 0) throw ConfigError("model.dim must be positive");
  } else {
    throw ConfigError("model.kind must be 'halfplane' or 'euclidean'");
  }

  const std::string family = t.require("family.kind");
  if (family == "projection") {
    if (cfg.model != ModelKind::HalfPlane) throw ConfigError("projection families need the half-plane model");
    cfg.family = FamilyKind::Projection;
    cfg.target = read_target(t);
  } else if (family == "prox") {
    cfg.family = FamilyKind::Prox;
    cfg.center = read_point(t, "family.center", cfg.model, cfg.dim);
  } else if (family == "resolvent") {
    cfg.family = FamilyKind::Resolvent;
    const std::string map = t.require("family.map");
    if (map == "identity") {
      cfg.base_map = BaseMapKind::Identity;
    } else if (map == "constant") {
      cfg.base_map = BaseMapKind::Constant;
      cfg.center = read_point(t, "family.center", cfg.model, cfg.dim);
    } else if (map == "projection") {
      if (cfg.model != ModelKind::HalfPlane) throw ConfigError("projection maps need the half-plane model");
      cfg.base_map = BaseMapKind::Projection;
      cfg.target = read_target(t);
    } else {
      throw ConfigError("family.map must be identity, constant or projection");
    }
    if (auto v = t.take("family.tolerance")) {
      cfg.solver_tolerance = to_double(*v, "family.tolerance");
      if (!(cfg.solver_tolerance > 0.0)) throw ConfigError("family.tolerance must be positive");
    }
    if (auto v = t.take("family.max_iterations")) {
      cfg.solver_max_iterations = to_size(*v, "family.max_iterations");
      if (cfg.solver_max_iterations == 0) throw ConfigError("family.max_iterations must be positive");
    }
  } else if (family == "identity") {
    cfg.family = FamilyKind::Identity;
  } else {
    throw ConfigError("family.kind must be projection, prox, resolvent or identity");
  }

  const std::string weights = t.require("weights.kind");
  if (weights == "reciprocal") {
    cfg.weights_reciprocal = true;
    const auto offset = to_size(t.require("weights.offset"), "weights.offset");
    if (offset < 1 || offset > 1'000'000'000) throw ConfigError("weights.offset must be at least 1");
    cfg.weights_offset = static_cast<unsigned>(offset);
  } else if (weights == "list") {
    cfg.weights_reciprocal = false;
    cfg.weights_values = to_doubles(t.require("weights.values"), "weights.values");
    for (double w : cfg.weights_values) {
      if (!(w > 0.0 && w <= 1.0)) throw ConfigError("weights.values must lie in (0, 1]");
    }
  } else {
    throw ConfigError("weights.kind must be 'reciprocal' or 'list'");
  }

  const std::string steps = t.require("steps.kind");
  if (steps == "constant") {
    cfg.steps_constant = true;
    cfg.gamma = to_double(t.require("steps.gamma"), "steps.gamma");
    if (!(cfg.gamma > 0.0)) throw ConfigError("steps.gamma must be positive");
  } else if (steps == "list") {
    cfg.steps_constant = false;
    cfg.steps_values = to_doubles(t.require("steps.values"), "steps.values");
    for (double g : cfg.steps_values) {
      if (!(g > 0.0)) throw ConfigError("steps.values must be positive");
    }
  } else {
    throw ConfigError("steps.kind must be 'constant' or 'list'");
  }

  cfg.anchor = read_point(t, "anchor", cfg.model, cfg.dim);
  cfg.start = read_point(t, "start", cfg.model, cfg.dim);
  cfg.num_steps = to_size(t.require("num_steps"), "num_steps");
  if (!cfg.weights_reciprocal && cfg.weights_values.size() < cfg.num_steps) {
    throw ConfigError("weights.values has fewer entries than num_steps");
  }

  const std::string variant = t.take("variant").value_or("halpern");
  if (variant == "halpern") {
    cfg.variant = iterations::Variant::Halpern;
  } else if (variant == "tikhonov") {
    cfg.variant = iterations::Variant::Tikhonov;
  } else {
    throw ConfigError("variant must be 'halpern' or 'tikhonov'");
  }

  if (t.has("limit.x") || t.has("limit.y") || t.has("limit.coords")) {
    cfg.limit = read_point(t, "limit", cfg.model, cfg.dim);
  }
  t.finish();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) { return parse_config(read_file(path)); }

std::string serialize(const ExperimentConfig& cfg) {
  std::ostringstream os;
  if (cfg.model == ModelKind::HalfPlane) {
    os << "model.kind = halfplane\n";
  } else {
    os << "model.kind = euclidean\nmodel.dim = " << cfg.dim << '\n';
  }
  switch (cfg.family) {
    case FamilyKind::Projection:
      os << "family.kind = projection\n";
      write_target(os, *cfg.target);
      break;
    case FamilyKind::Prox:
      os << "family.kind = prox\n";
      write_point(os, "family.center", *cfg.center);
      break;
    case FamilyKind::Resolvent:
      os << "family.kind = resolvent\n";
      switch (cfg.base_map) {
        case BaseMapKind::Identity:
          os << "family.map = identity\n";
          break;
        case BaseMapKind::Constant:
          os << "family.map = constant\n";
          write_point(os, "family.center", *cfg.center);
          break;
        case BaseMapKind::Projection:
          os << "family.map = projection\n";
          write_target(os, *cfg.target);
          break;
      }
      os << "family.tolerance = " << fmt(cfg.solver_tolerance) << '\n'
         << "family.max_iterations = " << cfg.solver_max_iterations << '\n';
      break;
    case FamilyKind::Identity:
      os << "family.kind = identity\n";
      break;
  }
  if (cfg.weights_reciprocal) {
    os << "weights.kind = reciprocal\nweights.offset = " << cfg.weights_offset << '\n';
  } else {
    os << "weights.kind = list\nweights.values = " << fmt(cfg.weights_values) << '\n';
  }
  if (cfg.steps_constant) {
    os << "steps.kind = constant\nsteps.gamma = " << fmt(cfg.gamma) << '\n';
  } else {
    os << "steps.kind = list\nsteps.values = " << fmt(cfg.steps_values) << '\n';
  }
  write_point(os, "anchor", cfg.anchor);
  write_point(os, "start", cfg.start);
  os << "num_steps = " << cfg.num_steps << '\n';
  os << "variant = " << (cfg.variant == iterations::Variant::Halpern ? "halpern" : "tikhonov") << '\n';
  if (cfg.limit) write_point(os, "limit", *cfg.limit);
  return os.str();
}

operators::Map ExperimentConfig::base() const {
  switch (base_map) {
    case BaseMapKind::Identity:
      return [](const Point& p) { return p; };
    case BaseMapKind::Constant:
      return [c = *center](const Point&) { return c; };
    case BaseMapKind::Projection:
      return [g = *target](const Point& p) { return geometry::project(p, g); };
  }
  throw std::logic_error("unreachable");
}

operators::OperatorFamily ExperimentConfig::make_family() const {
  switch (family) {
    case FamilyKind::Projection:
      return operators::projection_family(*target);
    case FamilyKind::Prox:
      return operators::prox_family(*center);
    case FamilyKind::Resolvent:
      return operators::resolvent_family(base(), solver_tolerance, solver_max_iterations);
    case FamilyKind::Identity:
      return operators::identity_family();
  }
  throw std::logic_error("unreachable");
}

iterations::WeightScheme ExperimentConfig::weights() const {
  return weights_reciprocal ? iterations::WeightScheme::reciprocal(weights_offset)
                            : iterations::WeightScheme::explicit_list(weights_values);
}

operators::StepSizes ExperimentConfig::steps() const {
  return steps_constant ? operators::StepSizes::constant(gamma)
                        : operators::StepSizes::explicit_list(steps_values);
}

iterations::IterationConfig ExperimentConfig::iteration_config() const {
  return iterations::IterationConfig{make_family(), steps(), weights(), anchor, start, num_steps, variant};
}

Point derived_limit(const ExperimentConfig& cfg) {
  if (cfg.limit) return *cfg.limit;
  switch (cfg.family) {
    case FamilyKind::Projection:
      return geometry::project(cfg.anchor, *cfg.target);
    case FamilyKind::Prox:
      return *cfg.center;
    case FamilyKind::Identity:
      return cfg.anchor;
    case FamilyKind::Resolvent:
      switch (cfg.base_map) {
        case BaseMapKind::Identity:
          return cfg.anchor;
        case BaseMapKind::Constant:
          return *cfg.center;
        case BaseMapKind::Projection:
          return geometry::project(cfg.anchor, *cfg.target);
      }
  }
  throw std::logic_error("unreachable");
}

ParamsFile parse_params(std::string_view text) {
  Table t(parse_key_values(text));
  ParamsFile out;
  auto& p = out.params;
  try {
    if (auto v = t.take("b")) p.b = rates::parse_natural(*v);
    if (auto v = t.take("gamma")) p.gamma = rates::parse_rational(*v);
    if (auto v = t.take("gamma_upper")) p.gamma_upper = rates::RationalSequence::parse(*v);
    if (auto v = t.take("alpha_lower")) p.alpha_lower = rates::RationalSequence::parse(*v);
    if (auto v = t.take("moduli")) p.moduli = rates::parse_moduli(*v);
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  out.fixed_point = read_any_point(t, "fixed_point");
  t.finish();
  return out;
}

ParamsFile load_params(const std::filesystem::path& path) { return parse_params(read_file(path)); }

std::string serialize(const ParamsFile& params) {
  std::ostringstream os;
  const auto& p = params.params;
  os << "b = " << rates::to_string(p.b) << '\n'
     << "gamma = " << rates::to_string(p.gamma) << '\n'
     << "gamma_upper = " << p.gamma_upper.spec() << '\n'
     << "alpha_lower = " << p.alpha_lower.spec() << '\n'
     << "moduli = " << p.moduli.description << '\n';
  if (params.fixed_point) write_point(os, "fixed_point", *params.fixed_point);
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace metaprox::harness
