#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tqg/qubit.hpp"
#include "tqg/rational.hpp"

namespace tqg {

/// The four cooperative games. `lgi` is the plain payoff-maximization game;
/// the biased variants add a third group that wins whenever the players'
/// average score fails to beat the classical benchmark.
enum class GameKind { lgi, biased_lgi, biased_tchsh, nonlocal_temporal };

std::string to_string(GameKind kind);
GameKind game_kind_from_string(const std::string& s);

/// True for the kinds whose win/lose verdict against the benchmark applies.
constexpr bool is_biased(GameKind k) { return k != GameKind::lgi; }

/// True for the kinds played on one shared qubit measured twice in sequence
/// (as opposed to the entangled-pair game).
constexpr bool is_temporal(GameKind k) { return k != GameKind::nonlocal_temporal; }

/// True for the kinds whose questions address time slots t1,t2,t3, where
/// both players share slot t2.
constexpr bool uses_time_slots(GameKind k) {
  return k == GameKind::lgi || k == GameKind::biased_lgi;
}

/// Fixed bijection between answer bits and observed outcomes:
/// 0 <-> +1, 1 <-> -1. Players must report the outcome they saw.
constexpr int answer_bit(Outcome o) { return o == Outcome::plus ? 0 : 1; }
constexpr Outcome outcome_for_answer(int bit) {
  if (bit == 0) return Outcome::plus;
  if (bit == 1) return Outcome::minus;
  throw std::invalid_argument("answer bit must be 0 or 1");
}

using QuestionPair = std::pair<int, int>;

/// Score entries are +1/-1 indexed by the two answer bits.
using ScoreTable = std::array<std::array<int, 2>, 2>;

/// A game as data: question sets, exact question distribution xi, the
/// +1/-1 score table per question pair, and the exact classical benchmark.
struct GameSpec {
  GameKind kind;
  std::vector<int> k_set;
  std::vector<int> l_set;
  std::map<QuestionPair, Rational> xi;
  std::map<QuestionPair, ScoreTable> payoff;
  Rational mu_cl;

  int payoff_value(int k, int l, int r, int s) const { return payoff.at({k, l})[r][s]; }
  Rational xi_exact(int k, int l) const { return xi.at({k, l}); }
  double xi_value(int k, int l) const { return to_double(xi.at({k, l})); }
};

/// Builds the canonical tables for a kind. LGI kinds: K = {1,2}, L = {2,3},
/// xi(k,l) = (1 - delta_kl)/3, win iff r xor s = (k*l) mod 2, benchmark 1/3.
/// CHSH kinds: K = L = {0,1}, xi = 1/4, win iff r xor s = k*l, benchmark 1/2.
GameSpec make_game(GameKind kind);

}  // namespace tqg
