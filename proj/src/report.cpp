#include "symcls/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "symcls/brauer.hpp"
#include "symcls/error.hpp"

namespace symcls {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string case_key(const GroupFamily& f, int p, int dim_v) {
  return f.name() + " p=" + std::to_string(p) + " dimV=" + std::to_string(dim_v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <typename T>
std::string csv_optional(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

void SweepConfig::validate() const {
  if (families.empty()) throw Error(ErrorKind::ParameterOutOfRange, "no families selected");
  if (n_lo > n_hi) throw Error(ErrorKind::ParameterOutOfRange, "empty parameter range");
  if (primes.empty()) throw Error(ErrorKind::ParameterOutOfRange, "no primes selected");
  for (int p : primes) {
    if (!is_prime(p)) throw Error(ErrorKind::ParameterOutOfRange, std::to_string(p) + " is not prime");
  }
  if (dim_lo < 1 || dim_lo > dim_hi) throw Error(ErrorKind::ParameterOutOfRange, "invalid dim V range");
}

bool SweepResult::all_agree() const {
  return std::all_of(records.begin(), records.end(), [](const CaseRecord& r) { return r.agree; });
}

int SweepResult::exit_code() const {
  if (!failures.empty()) return kExitConstructionFailure;
  return all_agree() ? kExitOk : kExitDisagreement;
}

std::vector<CaseRecord> to_records(const VerificationReport& report) {
  CaseRecord base;
  base.family = report.params.family.kind_name();
  base.n = report.params.family.param;
  base.p = report.params.p;
  base.t = report.params.t();
  base.l = report.params.l();
  base.character = report.label;
  base.dim_v = report.params.dim_v;

  std::vector<CaseRecord> out;
  if (report.linear) {
    CaseRecord r = base;
    r.observed_dim = report.observed_dim;
    r.predicted_obasis = report.predicted_obasis;
    r.observed_obasis = report.observed_obasis;
    r.agree = report.agree;
    out.push_back(std::move(r));
    return out;
  }
  for (const auto& row : report.rows) {
    CaseRecord r = base;
    r.t_gamma = row.t_gamma;
    r.predicted_dim = row.predicted_dim;
    r.observed_dim = row.rank_gram;
    r.predicted_obasis = row.predicted_obasis;
    r.observed_obasis = row.observed_obasis;
    r.agree = row.agree;
    out.push_back(std::move(r));
  }
  return out;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  SweepResult result;
  std::vector<FamilyKind> families = config.families;
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  std::vector<int> primes = config.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  VerifyOptions options;
  options.orbit_cap = config.orbit_cap;
  options.obasis_predicate = config.obasis_predicate;

  for (FamilyKind kind : families) {
    for (int n = config.n_lo; n <= config.n_hi; ++n) {
      const GroupFamily family{kind, n};
      if (n < family.min_param()) {
        result.notes.push_back(std::string(family_kind_name(kind)) + " " + std::to_string(n) +
                               " skipped: below the family minimum " + std::to_string(family.min_param()));
        continue;
      }
      const FiniteGroup g = build_group(family);
      for (int p : primes) {
        const auto ibr = irreducible_brauer_characters(g, p);
        for (int dim_v = config.dim_lo; dim_v <= config.dim_hi; ++dim_v) {
          const bool has_two_dim =
              std::any_of(ibr.begin(), ibr.end(), [](const BrauerCharacter& phi) { return !phi.is_linear(); });
          if (!has_two_dim) result.vacuous.push_back(case_key(family, p, dim_v) + ": no two-dimensional Brauer character");
          for (const auto& phi : ibr) {
            try {
              const VerificationReport report = verify_case(g, phi, dim_v, options);
              for (auto& r : to_records(report)) result.records.push_back(std::move(r));
            } catch (const Error& e) {
              result.failures.push_back(case_key(family, p, dim_v) + " " + phi.label() + ": " + e.what());
            }
          }
        }
      }
    }
  }
  if (result.records.empty()) result.warnings.push_back("sweep produced no cases");
  return result;
}

std::string to_json(const SweepConfig& config, const SweepResult& result) {
  ordered_json families = ordered_json::array();
  for (FamilyKind k : config.families) families.push_back(std::string(family_kind_name(k)));

  ordered_json meta;
  meta["tool_version"] = kToolVersion;
  meta["config"] = {{"families", families},
                    {"n_range", {config.n_lo, config.n_hi}},
                    {"primes", config.primes},
                    {"dimV_range", {config.dim_lo, config.dim_hi}},
                    {"cap", config.orbit_cap}};
  meta["vacuous"] = result.vacuous;
  meta["notes"] = result.notes;
  meta["failures"] = result.failures;
  meta["warnings"] = result.warnings;
  meta["all_agree"] = result.all_agree();

  ordered_json cases = ordered_json::array();
  for (const auto& r : result.records) {
    ordered_json rec;
    rec["family"] = r.family;
    rec["n"] = r.n;
    rec["p"] = r.p;
    rec["t"] = r.t;
    rec["l"] = r.l;
    rec["character"] = r.character;
    rec["dimV"] = r.dim_v;
    rec["t_gamma"] = r.t_gamma ? ordered_json(*r.t_gamma) : ordered_json(nullptr);
    rec["predicted_dim"] = r.predicted_dim ? ordered_json(*r.predicted_dim) : ordered_json(nullptr);
    rec["observed_dim"] = r.observed_dim;
    rec["predicted_obasis"] = r.predicted_obasis;
    rec["observed_obasis"] = r.observed_obasis;
    rec["agree"] = r.agree;
    cases.push_back(std::move(rec));
  }
  ordered_json doc;
  doc["meta"] = std::move(meta);
  doc["cases"] = std::move(cases);
  return doc.dump(2) + "\n";
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "family,n,p,t,l,character,dimV,t_gamma,predicted_dim,observed_dim,predicted_obasis,observed_obasis,agree\r\n";
  for (const auto& r : result.records) {
    os << csv_field(r.family) << ',' << r.n << ',' << r.p << ',' << r.t << ',' << r.l << ',' << csv_field(r.character)
       << ',' << r.dim_v << ',' << csv_optional(r.t_gamma) << ',' << csv_optional(r.predicted_dim) << ','
       << r.observed_dim << ',' << csv_bool(r.predicted_obasis) << ',' << csv_bool(r.observed_obasis) << ','
       << csv_bool(r.agree) << "\r\n";
  }
  return os.str();
}

}  // namespace symcls
