#include "fptcert/fptcert.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ordered = nlohmann::ordered_json;

struct Flag {
  const char* name;  // CLI spelling without dashes
  const char* key;   // job key
  const char* help;
};

const Flag kVars{"vars", "vars", "comma-separated variable names"};
const Flag kGens{"gens", "gens", "comma-separated generators"};
const Flag kPrime{"p", "p", "prime characteristic"};
const Flag kLevel{"e", "e", "exponent e (level p^e)"};
const Flag kLevelMax{"e-max", "e_max", "largest exponent to scan"};
const Flag kAlpha{"alpha", "alpha", "rational in (0,1]"};
const Flag kBlock{"block", "block", "comma-separated rationals"};
const Flag kIdeals{"ideals", "ideals", "ideals separated by ';', generators by ','"};

const std::map<std::string, std::vector<Flag>>& command_flags() {
  static const std::map<std::string, std::vector<Flag>> table = {
      {"polytope", {kVars, kGens, kPrime}},
      {"digits", {kAlpha, kPrime}},
      {"carry", {kBlock, kPrime}},
      {"fpt-bound", {kVars, kGens, kPrime}},
      {"nu", {kVars, kGens, kPrime, kLevel}},
      {"fpt-estimate", {kVars, kGens, kPrime, kLevelMax}},
      {"classify", {kVars, kGens}},
      {"verify-prime", {kVars, kGens, kPrime}},
      {"fvol-bound", {kVars, kGens, kPrime, kLevelMax}},
      {"fvol-count", {kVars, kIdeals, kPrime, kLevel}},
      {"fvol-estimate", {kVars, kIdeals, kPrime, kLevelMax}},
      {"witness", {kVars, kGens, kPrime, kLevel}},
  };
  return table;
}

const char* summary_of(const std::string& name) {
  static const std::map<std::string, const char*> text = {
      {"polytope", "exponent matrix, maximal point, vertices"},
      {"digits", "base-p expansion of a rational"},
      {"carry", "carry horizon of a block"},
      {"fpt-bound", "F-pure threshold certificate"},
      {"nu", "brute-force nu(p^e)"},
      {"fpt-estimate", "nu(p^e)/p^e for e = 1..e_max"},
      {"classify", "compare fpt with lct of the term ideal"},
      {"verify-prime", "check one prime against the classifier verdict"},
      {"fvol-bound", "F-volume lower bound"},
      {"fvol-count", "brute-force count of V(p^e)"},
      {"fvol-estimate", "normalized counts for e = 1..e_max"},
      {"witness", "coefficient of the distinguished monomial"},
  };
  auto it = text.find(name);
  return it == text.end() ? "" : it->second;
}

int exit_code(fptcert_status status) {
  switch (status) {
    case FPTCERT_OK: return 0;
    case FPTCERT_INVALID_INPUT: return 2;
    case FPTCERT_HYPOTHESIS: return 3;
    case FPTCERT_BUDGET: return 4;
    default: return 1;
  }
}

std::string scalar(const ordered& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool flat(const ordered& v) {
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

std::string joined(const ordered& v, const char* sep) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += sep;
    out += x.is_array() ? "(" + joined(x, ", ") + ")" : scalar(x);
  }
  return out;
}

void render(std::ostream& os, const ordered& v, const std::string& indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const auto& x = it.value();
    if (x.is_object()) {
      os << indent << it.key() << ":\n";
      render(os, x, indent + "  ");
    } else if (x.is_array() && !x.empty() && x.front().is_object()) {
      os << indent << it.key() << ":\n";
      for (const auto& row : x) {
        std::string line;
        for (auto r = row.begin(); r != row.end(); ++r)
          line += (line.empty() ? "" : "  ") + r.key() + "=" + (r.value().is_array() ? joined(r.value(), ",") : scalar(r.value()));
        os << indent << "  " << line << "\n";
      }
    } else if (x.is_array() && !x.empty() && x.front().is_array() && it.key() != "rho") {
      // tables: one row per line
      os << indent << it.key() << ":\n";
      for (const auto& row : x) os << indent << "  " << (flat(row) ? joined(row, "\t") : row.dump()) << "\n";
    } else if (x.is_array()) {
      os << indent << it.key() << ": " << joined(x, ", ") << "\n";
    } else {
      os << indent << it.key() << ": " << scalar(x) << "\n";
    }
  }
}

bool apply_budget(fptcert_context* ctx, const std::string& key, const std::string& text) {
  static const std::map<std::string, fptcert_budget> names = {
      {"max_multisets", FPTCERT_BUDGET_MAX_MULTISETS},
      {"max_terms", FPTCERT_BUDGET_MAX_TERMS},
      {"max_dimension", FPTCERT_BUDGET_MAX_DIMENSION},
  };
  auto it = names.find(key);
  if (it == names.end() || text.empty() || text.size() > 19 || text.find_first_not_of("0123456789") != std::string::npos)
    return false;
  return fptcert_context_set_budget(ctx, it->second, std::stoull(text)) == FPTCERT_OK;
}

// "max_terms=100,max_dimension=8"
bool budget_env(fptcert_context* ctx, const std::string& spec) {
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || !apply_budget(ctx, item.substr(0, eq), item.substr(eq + 1))) return false;
  }
  return true;
}

struct Invocation {
  std::string command;
  std::map<std::string, std::string> values;  // job key -> flag text
  std::string job;
  std::string format = "json";
  std::optional<std::uint64_t> max_multisets, max_terms, max_dimension;
};

int fail_input(const std::string& message, const std::string& format) {
  ordered err;
  err["error"]["kind"] = "DomainError";
  err["error"]["message"] = message;
  if (format == "text")
    std::cout << "error: DomainError: " << message << "\n";
  else
    std::cout << err.dump() << "\n";
  std::cerr << "fptcert: " << message << "\n";
  return 2;
}

int execute(const Invocation& inv) {
  ordered job = ordered::object();
  if (!inv.job.empty()) {
    std::ifstream file(inv.job);
    if (!file) return fail_input("cannot read job file '" + inv.job + "'", inv.format);
    try {
      job = ordered::parse(file);
    } catch (const nlohmann::json::parse_error& e) {
      return fail_input(std::string("malformed job file: ") + e.what(), inv.format);
    }
    if (!job.is_object()) return fail_input("job file must hold a JSON object", inv.format);
  }
  for (const auto& [key, text] : inv.values) job[key] = text;
  auto put = [&](const char* key, const std::optional<std::uint64_t>& v) {
    if (v) job["budgets"][key] = *v;
  };
  put("max_multisets", inv.max_multisets);
  put("max_terms", inv.max_terms);
  put("max_dimension", inv.max_dimension);

  fptcert_context* ctx = fptcert_context_create();
  if (!ctx) {
    std::cerr << "fptcert: out of memory\n";
    return 1;
  }
  if (const char* env = std::getenv("FPTCERT_BUDGET"); env && !budget_env(ctx, env)) {
    fptcert_context_destroy(ctx);
    return fail_input(std::string("bad FPTCERT_BUDGET value '") + env + "'", inv.format);
  }

  fptcert_result* result = nullptr;
  const fptcert_status status = fptcert_run(ctx, inv.command.c_str(), job.dump().c_str(), &result);
  int code = exit_code(status);
  if (!result) {
    std::cerr << "fptcert: " << fptcert_status_name(status) << "\n";
  } else if (status != FPTCERT_OK) {
    if (inv.format == "text")
      std::cout << "error: " << fptcert_result_error_kind(result) << ": " << fptcert_result_error_message(result) << "\n";
    else
      std::cout << fptcert_result_json(result) << "\n";
    std::cerr << "fptcert " << inv.command << ": " << fptcert_result_error_kind(result) << ": "
              << fptcert_result_error_message(result) << "\n";
  } else if (inv.format == "text") {
    const ordered doc = ordered::parse(fptcert_result_json(result));
    std::cout << doc.at("command").get<std::string>() << " (version " << doc.at("version").get<std::string>() << ")\n";
    render(std::cout, doc.at("result"), "  ");
  } else {
    std::cout << fptcert_result_json(result) << "\n";
  }
  fptcert_result_destroy(result);
  fptcert_context_destroy(ctx);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified F-pure thresholds and F-volumes for polynomial mappings"};
  app.set_version_flag("--version", std::string(fptcert_version()));
  app.require_subcommand(1);

  Invocation inv;
  for (const auto& [name, flags] : command_flags()) {
    CLI::App* sub = app.add_subcommand(name, summary_of(name));
    for (const auto& flag : flags) {
      sub->add_option_function<std::string>(
          std::string("--") + flag.name, [&inv, key = std::string(flag.key)](const std::string& v) { inv.values[key] = v; },
          flag.help);
    }
    sub->add_option("--job", inv.job, "JSON job file; flags win on conflict");
    sub->add_option("--format", inv.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-multisets", inv.max_multisets, "budget on enumerated multisets");
    sub->add_option("--max-terms", inv.max_terms, "budget on terms per product");
    sub->add_option("--max-dimension", inv.max_dimension, "largest column count for vertex enumeration");
    sub->callback([&inv, sub] { inv.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail_input(e.what(), inv.format);
  }
  return execute(inv);
}
