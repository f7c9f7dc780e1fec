#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "plift/lifting.hpp"
#include "plift/variability.hpp"

namespace plift {

/// SMT-LIB v2 commands, one per entry, grouped into named sections in the
/// order preamble, features, datatypes, selection, slots, constraint, check.
struct SmtScript {
  std::vector<std::string> commands;
  /// (section name, index of its first command)
  std::vector<std::pair<std::string, std::size_t>> sections;

  /// Commands of one section, empty if absent.
  std::vector<std::string> section(const std::string& name) const;

  /// Newline-separated text with a `; <section>` comment before each
  /// section.
  std::string text() const;
};

enum class ListEncoding {
  Concat,      // exact seq.++ of ite-guarded units
  Membership,  // T_a_has / T_a_size macros only, no Seq
  Auto,        // macros for quantifiers and sizes; Seq slot kept up to concat_limit
};

enum class QuantifierEncoding {
  Native,  // SMT-LIB forall/exists over the class sorts
  Expand,  // finite conjunction/disjunction over the objects
  Auto,    // Expand while it stays under expansion_limit instances
};

struct SmtOptions {
  ListEncoding lists = ListEncoding::Auto;
  std::size_t concat_limit = 8;
  /// Also emit slot functions the constraint never navigates.
  bool all_slots = false;
  QuantifierEncoding quantifiers = QuantifierEncoding::Auto;
  /// Instantiation budget for Auto.
  std::size_t expansion_limit = 250000;
};

/// Translates a product line and a lifted constraint into a script whose
/// satisfiability witnesses a configuration that violates the constraint.
///
/// Features become Bool constants; each class T becomes an enumeration
/// datatype of its objects plus NONE_T; presence conditions become
/// selected_T; every attribute a becomes a function T_a asserted per object,
/// with references bound through ite and list slots concatenated from
/// ite-guarded units. Long lists are described by membership and length
/// only, which is all a constraint can observe. NONE rows are pinned to
/// defaults.
/// The lifted constraint is asserted negated.
///
/// Throws SymbolClash when two generated symbols coincide or collide with
/// SMT-LIB reserved words, and UnsupportedAtom for atoms outside the
/// supported theories.
SmtScript emit_smt(const ProductLine& pl, const LiftedConstraint& lc,
                   const SmtOptions& options = {});

/// Only the declare-const/assert block for the feature model.
std::vector<std::string> emit_feature_block(const FeatureModel& fm);

/// SMT-LIB rendering of a presence condition or feature-model formula.
std::string smt_formula(const PropFormula& f);

/// SMT-LIB string literal, e.g. a"b -> "a""b".
std::string smt_string_literal(const std::string& s);

}  // namespace plift
