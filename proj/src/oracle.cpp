#include "plift/oracle.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "plift/evaluate.hpp"

namespace plift {

OracleVerdict oracle_check(const ProductLine& pl, const TypedConstraint& c, std::size_t cap) {
  OracleSatisfied ok;
  for (const auto& k : enumerate_configurations(pl.feature_model, cap)) {
    BoundVariant v = bind(pl, k);
    if (!evaluate(c, pl.metamodel, v.graph)) return OracleViolation{k, std::move(v)};
    ++ok.count;
  }
  return ok;
}

std::string verdict_kind(const OracleVerdict& v) {
  return v.index() == 0 ? "AllVariantsSatisfy" : "Violation";
}

EquivalenceReport equivalence_test(const ProductLine& pl, const TypedConstraint& c,
                                   const SolverOptions& options) {
  EquivalenceReport r;
  CheckResult smt = check_detailed(pl, c, options);
  r.smt = smt.verdict;
  r.oracle = oracle_check(pl, c);
  r.agree = verdict_kind(r.smt) == verdict_kind(r.oracle);

  r.text = "smt: " + verdict_kind(r.smt);
  if (const auto* v = std::get_if<Violation>(&r.smt))
    r.text += " [" + v->config.to_string() + "]" + (v->confirmed ? " confirmed" : " unconfirmed");
  r.text += "\noracle: " + verdict_kind(r.oracle);
  if (const auto* s = std::get_if<OracleSatisfied>(&r.oracle)) {
    r.text += " (" + std::to_string(s->count) + " variants)";
    if (s->vacuous()) r.text += " warning: feature model is unsatisfiable";
  } else {
    r.text += " [" + std::get<OracleViolation>(r.oracle).config.to_string() + "]";
  }
  r.text += r.agree ? "\nagree" : "\nDISAGREE";

  if (!r.agree) {
    auto dir = std::filesystem::temp_directory_path();
    std::string name = "plift-disagree-" + std::to_string(::getpid()) + "-XXXXXX";
    std::string path = (dir / name).string();
    int fd = ::mkstemp(path.data());
    if (fd >= 0) {
      ::close(fd);
      std::ofstream(path) << smt.script.text();
      r.script_path = path;
      r.text += "\nscript: " + path;
    }
  }
  return r;
}

}  // namespace plift
