#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tropdesc {

/// Fixed-end (alpha) and free-end (beta) bottom weights of a relative invariant.
/// Both multisets are kept sorted in descending order.
struct TangencyProfile {
    std::vector<int> alpha;
    std::vector<int> beta;

    static TangencyProfile free_ends(std::vector<int> beta) { return TangencyProfile{{}, std::move(beta)}.canonical(); }

    int total_weight() const;
    TangencyProfile canonical() const;
    bool all_free_unit() const;

    auto operator<=>(const TangencyProfile&) const = default;
};

enum class SpecialTag {
    LineMinusKE,      // dL - kE
    LineMinusE1E2,    // dL - k1 E1 - k2 E2
    Box,              // the degree {(1,1)^d, (0,-1)^(d-1), (-1,0)^(d-2), (-2,-1)}
    LineMinusERel2,   // dL - E with a free bottom end of weight 2
};

struct SpecialDegree {
    SpecialTag tag = SpecialTag::Box;
    int d = 1;
    int k1 = 0;
    int k2 = 0;

    static SpecialDegree box(int d) { return {SpecialTag::Box, d, 0, 0}; }
    static SpecialDegree minus_ke(int d, int k) { return {SpecialTag::LineMinusKE, d, k, 0}; }
    static SpecialDegree minus_e1e2(int d, int k1, int k2) { return {SpecialTag::LineMinusE1E2, d, k1, k2}; }
    static SpecialDegree minus_e_rel2(int d) { return {SpecialTag::LineMinusERel2, d, 0, 0}; }

    auto operator<=>(const SpecialDegree&) const = default;
};

/// Codimension of a cohomology class of the plane: 0 fundamental, 1 line, 2 point.
enum class Codim : int { T0 = 0, T1 = 1, T2 = 2 };

struct Insertion {
    int psi = 0;
    Codim cls = Codim::T2;

    int codim() const { return static_cast<int>(cls); }

    // Canonical insertion order is by (class, psi power).
    friend auto operator<=>(const Insertion& a, const Insertion& b) {
        if (auto c = a.cls <=> b.cls; c != 0) return c;
        return a.psi <=> b.psi;
    }
    friend bool operator==(const Insertion&, const Insertion&) = default;
};

/// A genus-0 descendant correlator of the plane, insertions kept in canonical order.
struct Correlator {
    int d = 0;
    std::vector<Insertion> insertions;

    Correlator canonical() const;
    auto operator<=>(const Correlator&) const = default;
};

namespace key {
struct N { int d; auto operator<=>(const N&) const = default; };
struct Rel { int d; TangencyProfile profile; auto operator<=>(const Rel&) const = default; };
struct Special { SpecialDegree degree; auto operator<=>(const Special&) const = default; };
struct PsiP { int d; int k; auto operator<=>(const PsiP&) const = default; };
struct PsiL { int d; int k; auto operator<=>(const PsiL&) const = default; };
struct PsiLL { int d; auto operator<=>(const PsiLL&) const = default; };
struct Corr { Correlator correlator; auto operator<=>(const Corr&) const = default; };
}  // namespace key

/// Canonical identifier of one invariant. Constructed keys are always canonical:
/// profiles sorted, insertions sorted, and aliases folded (rel with only unit free
/// ends is N, psiP with k = 0 is N).
class InvariantKey {
public:
    using Variant = std::variant<key::N, key::Rel, key::Special, key::PsiP, key::PsiL, key::PsiLL, key::Corr>;

    static InvariantKey n(int d);
    static InvariantKey rel(int d, TangencyProfile profile);
    static InvariantKey special(SpecialDegree degree);
    static InvariantKey psi_p(int d, int k);
    static InvariantKey psi_l(int d, int k);
    static InvariantKey psi_ll(int d);
    static InvariantKey correlator(Correlator c);

    /// Parses the string form produced by str(). Throws ParseError.
    static InvariantKey parse(std::string_view text);

    std::string str() const;
    const Variant& value() const { return value_; }

    template <typename T>
    const T* get_if() const { return std::get_if<T>(&value_); }

    friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
    friend auto operator<=>(const InvariantKey& a, const InvariantKey& b) { return a.str() <=> b.str(); }

private:
    explicit InvariantKey(Variant v) : value_(std::move(v)) {}
    Variant value_;
};

std::string to_string(const SpecialDegree& degree);
std::string to_string(Codim c);

}  // namespace tropdesc
