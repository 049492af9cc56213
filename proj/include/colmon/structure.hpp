// colmon - collision-table monoids and their subshifts
//
// Decision procedures for the structural hypotheses: annihilability,
// one-sided inverses, the sets M+ and M-, and context-injectivity of the
// maps from M+ and M- to their one-sided contexts.
//
// Every search here runs over right words only (left words for the mirror
// side). For e = a+ a- and a probe g = g+ g- with g+ in R* and g- in L*,
// e g = (e g+) g-, and appending letters of L never produces zero. So e g is
// zero iff e g+ is zero, and e g is the unit iff g- is empty and e g+ is
// the unit. The collision of e with a right word only ever touches a-:
// its state is the depth reached in a- together with the letter currently
// on top, which may have been replaced by a generator outcome. Once a- is
// used up, the product is a+ followed by whatever right letters remain and
// neither zero nor (for nonempty a+) the unit can be reached. These states
// are finite, so each question is a reachability question on a finite
// automaton and every answer is exact.

#ifndef COLMON_STRUCTURE_HPP_
#define COLMON_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colmon/presentation.hpp"
#include "colmon/rewrite.hpp"

namespace colmon {

  // States {Zero, One, Positive} and one state per left generator, stepped
  // by right letters: the collision of a single left generator with a right
  // word. The mirror automaton has states {Zero, One, Negative} and one per
  // right generator, stepped by left letters acting on the left.
  class CollisionAutomaton {
   public:
    using State = std::size_t;

    static constexpr State zero     = 0;
    static constexpr State one      = 1;
    static constexpr State overflow = 2;  // Positive, or Negative for mirror

    CollisionAutomaton(Presentation const& p, Side side);

    Side side() const noexcept {
      return _side;
    }
    std::size_t num_states() const noexcept {
      return 3 + _generators.size();
    }
    std::size_t num_inputs() const noexcept {
      return _inputs.size();
    }
    // The state of generator g (a letter on side()).
    State state_of(Letter g) const;
    // For generator states, the generator; otherwise nullopt.
    std::optional<Letter> generator(State s) const;
    Letter                input(std::size_t i) const noexcept {
      return _inputs[i];
    }
    State step(State s, std::size_t input_index) const noexcept {
      return _delta[s * _inputs.size() + input_index];
    }

    // DOT graph, states labelled by generator symbols.
    std::string to_dot(Presentation const& p, std::string const& name) const;

   private:
    Side                _side;
    std::vector<Letter> _generators;
    std::vector<Letter> _inputs;
    std::vector<State>  _delta;
  };

  struct WitnessReport {
    bool                       exists = false;
    std::optional<Word>        witness;
    std::optional<std::size_t> length;
    std::size_t                bound_claimed = 0;
    std::optional<bool>        within_bound;
  };

  // Right annihilation: some right word w with e w = 0. Witnesses are
  // shortest, ties broken by declaration order. Throws std::domain_error
  // on zero.
  WitnessReport right_annihilable(Presentation const& p, NormalForm const& e);
  // Mirror: some left word w with w e = 0.
  WitnessReport left_annihilable(Presentation const& p, NormalForm const& e);

  bool in_M_plus(Presentation const& p, NormalForm const& e);
  bool in_M_minus(Presentation const& p, NormalForm const& e);

  // e must be nonzero with empty plus part; throws std::invalid_argument
  // otherwise. Finds a shortest right word w with e w = 1.
  WitnessReport right_inverse(Presentation const& p, NormalForm const& e);
  // e must be nonzero with empty minus part; finds a shortest left word w
  // with w e = 1.
  WitnessReport left_inverse(Presentation const& p, NormalForm const& e);

  struct UnitIntersectionReport {
    bool                     trivial = false;
    std::vector<std::string> violations;
  };

  // M+ and M- meet only in the unit iff every right generator is left
  // annihilable and every left generator is right annihilable. Pure plus
  // words are never right annihilable, so a right generator that is not
  // left annihilable lies in both sets. Conversely, if the first letter of
  // a+ is left annihilable so is a+ a- (the collision reaches zero before
  // it gets past that letter), and symmetrically for the last letter of a-,
  // so no element other than the unit survives on both sides.
  UnitIntersectionReport unit_intersection_trivial(Presentation const& p);

  // g and h must be on the same side; throws std::invalid_argument
  // otherwise. Shortest word in the one-sided context of exactly one of
  // them: right words for left generators, left words for right ones.
  WitnessReport context_distinguishable(Presentation const& p,
                                        Letter              g,
                                        Letter              h);

  struct InjectivityReport {
    std::size_t max_len     = 0;
    std::size_t probe_bound = 0;
    std::size_t words       = 0;
    std::size_t pairs       = 0;
    // Longest among the shortest separating probes.
    std::size_t max_separation = 0;
    // Pairs with no separating probe of length <= probe_bound.
    std::vector<std::pair<Word, Word>> indistinguishable;

    bool injective() const noexcept {
      return indistinguishable.empty();
    }
  };

  // All pairs of distinct plus words of length <= max_len (the empty word
  // included), compared by left context. Separating probes are searched up
  // to length 2 * |L| * |R|. Throws std::invalid_argument if max_len == 0.
  InjectivityReport plus_map_injectivity(Presentation const& p,
                                         std::size_t         max_len);
  // All pairs of distinct minus words of length <= max_len, compared by
  // right context.
  InjectivityReport minus_map_injectivity(Presentation const& p,
                                          std::size_t         max_len);

  // Claimed and measured maximal witness lengths. The claims concern left
  // generators (right words); the mirror fields cover right generators with
  // the roles of L and R exchanged in the claim.
  struct BoundMeasurement {
    std::size_t claimed         = 0;
    std::size_t measured        = 0;
    std::size_t mirror_claimed  = 0;
    std::size_t mirror_measured = 0;

    bool within() const noexcept {
      return measured <= claimed && mirror_measured <= mirror_claimed;
    }
  };

  struct GeneratorWitness {
    Letter        generator;
    WitnessReport report;
  };

  struct SeparationWitness {
    Letter        first;
    Letter        second;
    WitnessReport report;
  };

  struct HypothesisReport {
    bool factorization_ok     = false;
    bool unit_intersection_ok = false;
    bool right_inverses_ok    = false;
    bool left_inverses_ok     = false;
    bool plus_map_injective   = false;
    bool minus_map_injective  = false;

    // Left generators for right_*, right generators for left_*.
    std::vector<GeneratorWitness>  right_inverses;
    std::vector<GeneratorWitness>  left_inverses;
    std::vector<GeneratorWitness>  right_annihilators;
    std::vector<GeneratorWitness>  left_annihilators;
    std::vector<SeparationWitness> separations;

    InjectivityReport plus_injectivity;
    InjectivityReport minus_injectivity;

    BoundMeasurement inverse_bound;
    BoundMeasurement annihilation_bound;
    BoundMeasurement separation_bound;

    std::vector<std::string> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // Never throws on a valid presentation; everything lands in the report.
  HypothesisReport check_theorem_hypotheses(Presentation const& p,
                                            std::size_t max_len = 4);

}  // namespace colmon

#endif  // COLMON_STRUCTURE_HPP_
