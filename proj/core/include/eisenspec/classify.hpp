#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisenspec/expansions.hpp"
#include "eisenspec/named.hpp"
#include "eisenspec/signed_digraph.hpp"
#include "eisenspec/switching.hpp"

namespace eisenspec {

enum class Family {
    None,
    Rank2CompleteBipartite,
    Rank3Triangle,
    Rank3T4Pos,
    Rank3T4Neg,
    Lambda2NegK,
    Lambda2NegKStar,
    C5TypeA,
    C5TypeB,
    C5TypeC,
    C5TypeD,
    SemicompleteG,
    SemicompleteTilde,
    SemicompleteHat,
};

/// Upper-case tag, e.g. "RANK3_T4_POS".
std::string to_string(Family f);

struct ClassificationVerdict {
    Family family = Family::None;
    /// (p,q) for K_{p,q}, tau for expansions, (p,q) for semi-complete.
    std::vector<int> parameters;
    /// Reduced class name ("K3*", "T4+", ...) or the reason for None.
    std::string detail;
    /// Normal-form representative; witness maps the input onto it.
    std::optional<SignedDigraph> representative;
    std::optional<SwitchingIsomorphism> witness;

    [[nodiscard]] bool is_none() const { return family == Family::None; }
};

/// Throws std::invalid_argument on disconnected input.
ClassificationVerdict classify_rank2(const SignedDigraph& phi);
/// Throws std::invalid_argument on disconnected input.
ClassificationVerdict classify_rank3(const SignedDigraph& phi);
ClassificationVerdict classify_lambda2_negative(const SignedDigraph& phi);

struct NecessaryViolation {
    /// 1: induced K4 without a positive triangle; 2: induced C4 with gain 1;
    /// 3: induced C5 whose gain has non-negative real part.
    int condition = 0;
    std::vector<int> vertices;

    friend bool operator==(const NecessaryViolation&, const NecessaryViolation&) = default;
};

std::vector<NecessaryViolation> check_two_nonneg_necessary(const SignedDigraph& phi);

/// Throws std::invalid_argument unless the underlying graph is a clique expansion of C5.
ClassificationVerdict c5_signature_type(const SignedDigraph& phi);

/// Dominance of tau by the permitted maximal expansion columns for `type`.
bool check_c5_table(const ExpansionVector& tau, C5Type type);

/// A maximal column of the table; kFree marks an unbounded entry.
struct C5TableColumn {
    int index = 0;
    std::vector<int> sizes;
};
inline constexpr int kFree = 1 << 20;
const std::vector<C5TableColumn>& c5_table_columns();
std::vector<int> c5_table_permitted(C5Type type);
/// Position permutations under which dominance is tested for `type`.
std::vector<std::vector<int>> c5_table_symmetries(C5Type type);

/// Exact test n_pos = 2, n_zero = 0 on an (n-1,1)- or (n-2,2)-kite, cross-checked against the
/// clique condition. Throws std::invalid_argument on any other underlying graph.
bool kite_condition(const SignedDigraph& phi);

/// Throws std::invalid_argument unless the underlying graph is CE(P4,[p,1,1,q]) with p,q >= 2.
ClassificationVerdict semicomplete_bridge_classify(const SignedDigraph& phi);

}  // namespace eisenspec
