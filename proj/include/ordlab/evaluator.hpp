#pragma once

// Exact evaluation of quantifier-free formulas, and evaluation of quantified
// formulas in the finite structure where every bound variable ranges over its
// witness family.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ordlab/config.hpp"
#include "ordlab/encoders.hpp"
#include "ordlab/logic.hpp"

namespace ordlab {

using Assignment = std::map<std::string, Ordinal>;
/// Variable bindings in declaration order.
using Bindings = std::vector<std::pair<std::string, Ordinal>>;

Ordinal eval_term(const logic::Term& t, const Assignment& a);
bool eval_qf(const logic::Formula& f, const Assignment& a);

struct Verdict {
    bool holds = false;
    /// Holds: first witnesses (family order) for the outermost existential block.
    Bindings witnesses;
    /// Fails: first counterexample for the outermost universal block.  When
    /// the outermost block is existential, `context` holds the existential
    /// choice it refers to and `uniform` is false.
    Bindings counterexample;
    Bindings context;
    bool uniform = true;
    std::string note;
    logic::PrefixClass prefix;

    /// "sound" when the verdict transfers to the full structure (holds for a
    /// purely existential formula, fails for a purely universal one),
    /// "exact" for quantifier-free formulas, "restricted" otherwise.
    std::string evidence() const;
};

std::string verdict_name(const Verdict& v);  // HoldsInFamilies | FailsInFamilies

/// Compiles a formula once; the memo of quantified subformulas persists
/// across calls, so batteries over many assignments share work.
class GuidedChecker {
public:
    GuidedChecker(const logic::Formula& f, const EvalConfig& cfg);
    ~GuidedChecker();
    GuidedChecker(GuidedChecker&&) noexcept;
    GuidedChecker& operator=(GuidedChecker&&) noexcept;

    /// Truth in the restricted structure; `pins` fixes bound variables of the
    /// outer prefix to single values.
    bool holds(const Assignment& free, const Assignment& pins = {});
    Verdict check(const Assignment& free);

    const logic::Formula& formula() const;
    std::size_t memo_size() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Verdict check_guided(const logic::Formula& f, const Assignment& a, const EvalConfig& cfg);

bool semantic_oracle(enc::Predicate which, const Ordinal& a);

}  // namespace ordlab
