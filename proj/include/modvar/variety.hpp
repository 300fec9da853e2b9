#ifndef MODVAR_VARIETY_HPP
#define MODVAR_VARIETY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "modvar/perm.hpp"
#include "modvar/word.hpp"

namespace modvar {

// lhs = rhs, or lhs = 0 when rhs is empty.
struct Identity {
  Word lhs;
  std::optional<Word> rhs;
  std::size_t line = 0;  // source line, 0 if built in code

  static Identity equation(Word u, Word v);
  static Identity zero_reduced(Word w);

  bool is_zero_reduced() const noexcept { return !rhs.has_value(); }
  // The lhs is a product of pairwise distinct letters and the rhs is 0.
  bool is_nil_witness() const;
};

enum class JoinFlag { None, T, SL };

std::string_view to_string(JoinFlag flag);

struct VarietyPresentation {
  std::vector<Identity> identities;
  // Some n with x1...xn = 0 derivable, when known. build_closure computes
  // the least one.
  std::optional<std::size_t> nil_degree;
  // True when nil_degree came from an explicit linear 0-reduced identity.
  bool explicit_witness = false;
  JoinFlag join = JoinFlag::None;
  LetterTable letters;

  bool purely_zero_reduced() const;
  std::string to_string(Identity const& id) const;
};

struct ParseOptions {
  // Reject input without an explicit x1...xn = 0 line.
  bool strict = false;
  // Largest k tried when deriving x1...xk = 0 without a witness.
  std::size_t bound_cap = 8;
};

// Largest supported nilpotency degree; the closure enumerates every word of
// length below it.
inline constexpr std::size_t max_nil_degree = 8;

// MODVAR_BOUND_CAP from the environment, default 8, clamped to
// [1, max_nil_degree].
std::size_t bound_cap_from_environment();

// Identity file grammar: '#' comments, blank lines ignored, one identity per
// line "LHS = RHS" with RHS a word or "0". Throws ParseError.
VarietyPresentation parse_presentation(std::string_view text,
                                       ParseOptions const& options = {});

// Least k <= cap such that x1...xk = 0 is found derivable by searching
// rewrite sequences from the linear word. nullopt if none is found within
// the search limits. An explicit witness in the presentation wins.
std::optional<std::size_t> detect_nil_degree(VarietyPresentation const& p,
                                             std::size_t cap);

// Identity lists concatenated; nil_degree is the smaller one.
VarietyPresentation variety_meet(VarietyPresentation const& p1,
                                 VarietyPresentation const& p2);

enum class ClosureMode {
  Exact,    // nilpotency degree n known, bound n - 1, results exact
  Bounded,  // no witness; results hold for deductions within the bound only
};

struct StabilizerResult {
  Subgroup group;     // over positions of alphabet(u) in first-occurrence order
  bool zero = false;  // u = 0 holds; the group is then the full symmetric group
};

// Equivalence classes of all words of length <= bound whose alphabet is
// {0, ..., k-1} for some k, under the fully invariant congruence of the
// presentation, plus the set of words equal to 0. Every other word is
// reached by renaming letters.
class ClosureTable {
 public:
  using Id = std::uint32_t;

  std::size_t bound() const noexcept { return bound_; }
  ClosureMode mode() const noexcept { return mode_; }
  std::optional<std::size_t> nil_degree() const noexcept { return nil_degree_; }

  std::size_t word_count() const noexcept { return words_.size(); }
  Word const& word(Id id) const { return words_[id]; }
  std::optional<Id> find(Word const& w) const;

  // Class representative; all members of a class share it.
  Id root(Id id) const { return root_[id]; }
  bool zero(Id id) const { return zero_[root_[id]]; }
  std::vector<Id> const& members(Id root) const { return members_[root]; }

  // Ids of canonical words (letters first occurring in order 0, 1, ...).
  std::vector<Id> const& canonical_ids() const noexcept { return canonical_; }

  // Throws InvalidArgument if a word longer than the bound is queried in
  // bounded mode.
  bool is_zero(Word const& u) const;
  bool are_equal(Word const& u, Word const& v) const;
  StabilizerResult stabilizer(Word const& u) const;
  bool holds(Identity const& id) const;

  nlohmann::json to_json() const;

 private:
  friend ClosureTable build_closure(VarietyPresentation const&,
                                    std::optional<std::size_t>);
  ClosureTable() = default;

  // Id of w renamed through map; nullopt when the result is longer than the
  // bound.
  std::optional<Id> lookup(Word const& w, std::vector<Letter> const& map) const;

  std::size_t bound_ = 0;
  ClosureMode mode_ = ClosureMode::Exact;
  std::optional<std::size_t> nil_degree_;
  std::vector<Word> words_;
  std::unordered_map<std::string, Id> index_;
  std::vector<Id> root_;
  std::vector<bool> zero_;
  std::vector<std::vector<Id>> members_;
  std::vector<Id> canonical_;
};

// Exact closure when p.nil_degree is set (bound = nil_degree - 1). Otherwise
// a bounded closure up to bounded_length, which is then required.
ClosureTable build_closure(VarietyPresentation const& p,
                           std::optional<std::size_t> bounded_length = {});

}  // namespace modvar

#endif  // MODVAR_VARIETY_HPP
