#include "dispatch.hpp"

#include "primes.hpp"

#include <functional>
#include <map>

namespace fpt {

namespace {

using Input = nlohmann::json;

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

const Input& field(const Input& in, const char* key) {
  if (!in.is_object() || !in.contains(key))
    throw Error(ErrorKind::Domain, std::string("missing field '") + key + "'");
  return in.at(key);
}

// Strings or a comma-separated string.
std::vector<std::string> string_list(const Input& in, const char* key) {
  const Input& v = field(in, key);
  std::vector<std::string> out;
  if (v.is_string()) {
    out = split(v.get<std::string>(), ',');
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (!item.is_string()) throw Error(ErrorKind::Domain, std::string("'") + key + "' must hold strings");
      out.push_back(trim(item.get<std::string>()));
    }
  } else {
    throw Error(ErrorKind::Domain, std::string("'") + key + "' must be a string or a list of strings");
  }
  if (out.empty() || (out.size() == 1 && out[0].empty()))
    throw Error(ErrorKind::Domain, std::string("'") + key + "' is empty");
  return out;
}

std::uint64_t unsigned_field(const Input& in, const char* key) {
  const Input& v = field(in, key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    throw Error(ErrorKind::Domain, std::string("'") + key + "' must be nonnegative");
  }
  if (v.is_string()) {
    const std::string s = trim(v.get<std::string>());
    if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::Domain, std::string("'") + key + "' is not an unsigned integer");
    return std::stoull(s);
  }
  throw Error(ErrorKind::Domain, std::string("'") + key + "' must be an integer");
}

std::uint64_t prime_field(const Input& in) {
  const std::uint64_t p = unsigned_field(in, "p");
  Ring::integers_mod(p);  // validates
  return p;
}

std::uint64_t positive_field(const Input& in, const char* key) {
  const std::uint64_t v = unsigned_field(in, key);
  if (v == 0) throw Error(ErrorKind::Domain, std::string("'") + key + "' must be positive");
  return v;
}

std::vector<std::string> variables(const Input& in) {
  auto vars = string_list(in, "vars");
  validate_variables(vars);
  return vars;
}

std::vector<Polynomial> parse_list(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  std::vector<Polynomial> out;
  for (const auto& text : texts) out.push_back(parse_polynomial(text, vars));
  return out;
}

std::vector<Polynomial> generators(const Input& in, const std::vector<std::string>& vars) {
  return parse_list(string_list(in, "gens"), vars);
}

std::vector<Polynomial> reduced(const std::vector<Polynomial>& gens, std::uint64_t p) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Polynomial r = reduce_mod_p(gens[i], p);
    if (r.is_zero())
      throw Error(ErrorKind::ZeroGenerator,
                  "generator " + std::to_string(i + 1) + " vanishes mod " + std::to_string(p));
    out.push_back(std::move(r));
  }
  return out;
}

// List of lists, or "x;x+y^2,y" with ';' between ideals.
IdealList ideals(const Input& in, const std::vector<std::string>& vars, std::uint64_t p) {
  const Input& v = field(in, "ideals");
  std::vector<std::vector<std::string>> texts;
  if (v.is_string()) {
    for (const auto& part : split(v.get<std::string>(), ';')) texts.push_back(split(part, ','));
  } else if (v.is_array()) {
    for (const auto& ideal : v) {
      std::vector<std::string> gens;
      if (ideal.is_string()) {
        gens = split(ideal.get<std::string>(), ',');
      } else if (ideal.is_array()) {
        for (const auto& g : ideal) {
          if (!g.is_string()) throw Error(ErrorKind::Domain, "'ideals' must hold polynomial strings");
          gens.push_back(g.get<std::string>());
        }
      } else {
        throw Error(ErrorKind::Domain, "'ideals' must be a list of generator lists");
      }
      texts.push_back(std::move(gens));
    }
  } else {
    throw Error(ErrorKind::Domain, "'ideals' must be a string or a list");
  }
  IdealList out;
  for (const auto& t : texts) {
    if (t.empty() || (t.size() == 1 && t[0].empty())) throw Error(ErrorKind::Domain, "an ideal has no generators");
    out.push_back(reduced(parse_list(t, vars), p));
  }
  if (out.empty()) throw Error(ErrorKind::Domain, "'ideals' is empty");
  return out;
}

Json polytope(const Input& in, const Budgets& budgets) {
  const auto vars = variables(in);
  auto gens = generators(in, vars);
  if (in.contains("p")) gens = reduced(gens, prime_field(in));
  const ReducedMapping rm = reduce_generators(gens);
  const ExponentMatrix e = exponent_matrix(rm);
  const MaximalPointCert mp = maximal_point(e);
  Json out;
  out["blocks"] = rm.block_sizes();
  out["matrix"] = to_json(e);
  const Json point = to_json(mp);
  for (auto it = point.begin(); it != point.end(); ++it) out[it.key()] = it.value();
  const Rational s = newton_min_diagonal(e.columns);
  out["newton_min_diagonal"] = to_json(s);
  const bool diagonal = diagonal_position(e.columns);
  out["diagonal_position"] = diagonal;
  if (diagonal) {
    const auto cols = diagonal_face_columns(e);
    out["diagonal_face_columns"] = one_based({cols.begin(), cols.end()});
  }
  if (e.cols() <= budgets.max_dimension) {
    Json vs = Json::array();
    for (const auto& v : vertices(e, budgets.max_dimension)) vs.push_back(to_json(v));
    out["vertices"] = vs;
  } else {
    out["vertices"] = nullptr;
  }
  return out;
}

Json digits_cmd(const Input& in, const Budgets&) {
  const Input& a = field(in, "alpha");
  if (!a.is_string() && !a.is_number_integer())
    throw Error(ErrorKind::Domain, "'alpha' must be a rational string such as \"1/3\"");
  const Rational alpha = parse_rational(a.is_string() ? a.get<std::string>() : a.dump());
  const std::uint64_t p = unsigned_field(in, "p");
  if (p > kMaxPrime) throw Error(ErrorKind::Domain, "base too large");
  return to_json(digits(alpha, p));
}

RationalVector rational_list(const Input& in, const char* key) {
  RationalVector out;
  for (const auto& s : string_list(in, key)) out.push_back(parse_rational(s));
  return out;
}

Json carry_cmd(const Input& in, const Budgets&) {
  const RationalVector block = rational_list(in, "block");
  const std::uint64_t p = prime_field(in);
  Json out;
  out["p"] = p;
  out["block"] = to_json(block);
  out["S"] = to_json(carry_horizon(block, p));
  out["adds_without_carrying"] = adds_without_carrying(block, p);
  return out;
}

Json fpt_bound_cmd(const Input& in, const Budgets&) {
  const auto vars = variables(in);
  return to_json(fpt_bound(generators(in, vars), prime_field(in)));
}

Json nu_cmd(const Input& in, const Budgets& budgets) {
  const auto vars = variables(in);
  const std::uint64_t p = prime_field(in);
  const std::uint64_t e = positive_field(in, "e");
  const std::uint64_t value = nu(reduced(generators(in, vars), p), e, budgets);
  Json out;
  out["p"] = p;
  out["e"] = e;
  out["nu"] = value;
  out["ratio"] = to_json(make_rational(Integer(static_cast<unsigned long>(value)), ipow(static_cast<unsigned long>(p), e)));
  return out;
}

Json estimate_cmd(const Input& in, const Budgets& budgets) {
  const auto vars = variables(in);
  const std::uint64_t p = prime_field(in);
  const std::uint64_t e_max = positive_field(in, "e_max");
  Json samples = Json::array();
  for (const auto& s : fpt_estimate(generators(in, vars), p, e_max, budgets))
    samples.push_back(Json::array({s.e, s.nu, to_string(s.ratio)}));
  Json out;
  out["p"] = p;
  out["samples"] = samples;
  return out;
}

Json classify_cmd(const Input& in, const Budgets&) {
  const auto vars = variables(in);
  return to_json(lct_fpt_classifier(generators(in, vars)));
}

Json verify_cmd(const Input& in, const Budgets&) {
  const auto vars = variables(in);
  const auto gens = generators(in, vars);
  const std::uint64_t p = prime_field(in);
  const LctVerdict verdict = lct_fpt_classifier(gens);
  if (verdict.which == LctCase::Inconclusive)
    throw Error(ErrorKind::Domain, "classifier is inconclusive: " + verdict.failed_hypothesis);
  Json out;
  out["case"] = to_string(verdict.which);
  out["value"] = to_json(*verdict.value);
  out["predicate"] = verdict.predicate;
  const Json check = to_json(verify_prime(gens, p, verdict));
  for (auto it = check.begin(); it != check.end(); ++it) out[it.key()] = it.value();
  return out;
}

Json fvol_bound_cmd(const Input& in, const Budgets& budgets) {
  const auto vars = variables(in);
  const auto gens = generators(in, vars);
  const std::uint64_t p = prime_field(in);
  FVolumeCertificate cert = fvolume_lower_bound(gens, p);
  if (in.contains("e_max")) {
    IdealList principal;
    for (const auto& g : reduced(gens, p)) principal.push_back({g});
    cert.counts = fvolume_estimate(principal, p, positive_field(in, "e_max"), budgets);
  }
  Json out = to_json(cert);
  const std::size_t columns = exponent_matrix(reduce_generators(gens)).cols();
  if (columns <= budgets.max_dimension) {
    const ProductBound tb = term_ideal_volume_bound(gens, budgets.max_dimension);
    Json term;
    term["bound"] = to_json(tb.bound);
    term["witness"] = to_json(tb.witness);
    out["term_ideal_candidate"] = term;
  }
  return out;
}

Json fvol_count_cmd(const Input& in, const Budgets& budgets) {
  const auto vars = variables(in);
  const std::uint64_t p = prime_field(in);
  const std::uint64_t e = positive_field(in, "e");
  const VolumeCount c = fvolume_count(ideals(in, vars, p), e, budgets);
  Json out;
  out["p"] = p;
  out["e"] = e;
  out["count"] = c.count;
  out["boundary"] = c.boundary;
  out["estimate"] = to_json(c.estimate);
  out["estimate_decimal"] = to_decimal(c.estimate);
  return out;
}

Json fvol_estimate_cmd(const Input& in, const Budgets& budgets) {
  const auto vars = variables(in);
  const std::uint64_t p = prime_field(in);
  const std::uint64_t e_max = positive_field(in, "e_max");
  Json counts = Json::array(), decimals = Json::array();
  for (const auto& c : fvolume_estimate(ideals(in, vars, p), p, e_max, budgets)) {
    counts.push_back(to_json(c));
    decimals.push_back(to_decimal(c.estimate));
  }
  Json out;
  out["p"] = p;
  out["counts"] = counts;
  out["decimals"] = decimals;
  return out;
}

Json witness_cmd(const Input& in, const Budgets& budgets) {
  const auto vars = variables(in);
  const std::uint64_t p = prime_field(in);
  const std::uint64_t e = positive_field(in, "e");
  return to_json(coefficient_witness(generators(in, vars), p, e, budgets));
}

using Handler = std::function<Json(const Input&, const Budgets&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"polytope", polytope},         {"digits", digits_cmd},
      {"carry", carry_cmd},           {"fpt-bound", fpt_bound_cmd},
      {"nu", nu_cmd},                 {"fpt-estimate", estimate_cmd},
      {"classify", classify_cmd},     {"verify-prime", verify_cmd},
      {"fvol-bound", fvol_bound_cmd}, {"fvol-count", fvol_count_cmd},
      {"fvol-estimate", fvol_estimate_cmd}, {"witness", witness_cmd},
  };
  return table;
}

std::uint64_t budget_value(const std::string& key, const std::string& text) {
  if (text.empty() || text.size() > 19 || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::Domain, "budget '" + key + "' needs an unsigned integer");
  return std::stoull(text);
}

void set_budget(Budgets& b, const std::string& key, std::uint64_t value) {
  if (key == "max_multisets")
    b.max_multisets = value;
  else if (key == "max_terms")
    b.max_terms = value;
  else if (key == "max_dimension")
    b.max_dimension = static_cast<std::size_t>(value);
  else
    throw Error(ErrorKind::Domain, "unknown budget '" + key + "'");
}

}  // namespace

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> list = {
      {"polytope", "exponent matrix, maximal point, vertices"},
      {"digits", "base-p expansion of a rational in (0,1]"},
      {"carry", "carry horizon of a block"},
      {"fpt-bound", "F-pure threshold certificate"},
      {"nu", "brute-force nu(p^e)"},
      {"fpt-estimate", "nu(p^e)/p^e for e = 1..e_max"},
      {"classify", "fpt versus lct verdict"},
      {"verify-prime", "check one prime against the verdict"},
      {"fvol-bound", "F-volume lower bound"},
      {"fvol-count", "brute-force count of V(p^e)"},
      {"fvol-estimate", "normalized counts for e = 1..e_max"},
      {"witness", "coefficient of the distinguished monomial"},
  };
  return list;
}

Json run_command(const std::string& command, const nlohmann::json& input, const Budgets& budgets) {
  const auto& table = handlers();
  auto it = table.find(command);
  if (it == table.end()) throw Error(ErrorKind::Domain, "unknown command '" + command + "'");
  if (!input.is_object()) throw Error(ErrorKind::Domain, "job input must be a JSON object");
  const Budgets effective = input.contains("budgets") ? merge_budgets(budgets, input.at("budgets")) : budgets;
  Json out;
  out["command"] = command;
  out["input"] = Json::parse(input.dump());
  out["result"] = it->second(input, effective);
  out["version"] = kVersion;
  return out;
}

Json error_json(ErrorKind kind, const std::string& message) {
  Json out;
  out["error"]["kind"] = error_kind_name(kind);
  out["error"]["message"] = message;
  return out;
}

Budgets merge_budgets(Budgets base, const nlohmann::json& source) {
  if (!source.is_object()) throw Error(ErrorKind::Domain, "'budgets' must be an object");
  for (auto it = source.begin(); it != source.end(); ++it) {
    const std::string key = it.key();
    const auto& value = it.value();
    if (value.is_number_unsigned())
      set_budget(base, key, value.get<std::uint64_t>());
    else if (value.is_string())
      set_budget(base, key, budget_value(key, value.get<std::string>()));
    else
      throw Error(ErrorKind::Domain, "budget '" + key + "' needs an unsigned integer");
  }
  return base;
}

Budgets parse_budget_spec(Budgets base, const std::string& spec) {
  for (const auto& item : split(spec, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Domain, "budget entry '" + item + "' lacks '='");
    const std::string key = trim(item.substr(0, eq));
    set_budget(base, key, budget_value(key, trim(item.substr(eq + 1))));
  }
  return base;
}

}  // namespace fpt
