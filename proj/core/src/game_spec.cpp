#include "tqg/game_spec.hpp"

namespace tqg {

std::string to_string(GameKind kind) {
  switch (kind) {
    case GameKind::lgi: return "lgi";
    case GameKind::biased_lgi: return "biased-lgi";
    case GameKind::biased_tchsh: return "biased-tchsh";
    case GameKind::nonlocal_temporal: return "nonlocal-temporal";
  }
  throw std::invalid_argument("unknown game kind");
}

GameKind game_kind_from_string(const std::string& s) {
  if (s == "lgi") return GameKind::lgi;
  if (s == "biased-lgi") return GameKind::biased_lgi;
  if (s == "biased-tchsh") return GameKind::biased_tchsh;
  if (s == "nonlocal-temporal") return GameKind::nonlocal_temporal;
  throw std::invalid_argument("unknown game kind: " + s);
}

GameSpec make_game(GameKind kind) {
  GameSpec g;
  g.kind = kind;
  const bool slots = uses_time_slots(kind);
  g.k_set = slots ? std::vector<int>{1, 2} : std::vector<int>{0, 1};
  g.l_set = slots ? std::vector<int>{2, 3} : std::vector<int>{0, 1};

  for (const int k : g.k_set) {
    for (const int l : g.l_set) {
      const QuestionPair q{k, l};
      if (slots) {
        g.xi[q] = (k == l) ? Rational(0) : Rational(1, 3);
      } else {
        g.xi[q] = Rational(1, 4);
      }
      const int target_parity = slots ? (k * l) % 2 : k * l;
      ScoreTable t{};
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) t[r][s] = ((r ^ s) == target_parity) ? +1 : -1;
      g.payoff[q] = t;
    }
  }
  g.mu_cl = slots ? Rational(1, 3) : Rational(1, 2);
  return g;
}

}  // namespace tqg
