#include "arng/spectra.hpp"

#include <algorithm>

#include "arng/errors.hpp"

namespace arng {

namespace {

std::int64_t eval_poly(const std::vector<std::int64_t>& coeffs, std::int64_t den,
                       std::int64_t n) {
  std::int64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
  if (acc % den != 0) throw consistency_error("closed-form multiplicity is not integral");
  return acc / den;
}

// Eigenvalue tables of A(n,k). Entries whose printed source is corrupted are
// flagged; their exact values were recomputed from the quotient pipeline and
// confirmed by the invariant suite, with the literal reading kept alongside.

static const std::vector<ClosedFamily> kTable2 = {
    {0, -2, {1, -3, 1}, 1},
    {1, -4, {-1, 1}, 1},
    {1, -2, {-1, 1}, 1},
    {2, -4, {1}, 1},
};

static const std::vector<ClosedFamily> kTable3 = {
    {0, -3, {-1, 8, -6, 1}, 1},
    {1, -7, {0, -3, 1}, 2},
    {1, -6, {2, -3, 1}, 1},
    {1, -4, {0, -3, 1}, 1},
    {1, -3, {2, -3, 1}, 2},
    {2, -9, {-1, 1}, 1},
    {2, -6, {-2, 2}, 1},
    {3, -9, {1}, 1},
};

static const std::vector<ClosedFamily> kTable4 = {
    {0, -4, {1, -24, 29, -10, 1}, 1},
    {1, -10, {0, 5, -6, 1}, 6},
    {1, -9, {0, 8, -6, 1}, 1},
    {1, -8, {-6, 11, -6, 1}, 2},
    {1, -7, {0, 16, -12, 2}, 3},
    {1, -6, {0, 5, -6, 1}, 2},
    {1, -5, {0, 8, -6, 1}, 1},
    {1, -4, {-6, 11, -6, 1}, 6},
    {2, -14, {0, -3, 1}, 2},
    {2, -12, {6, -9, 3}, 2},
    {2, -10, {0, -9, 3}, 2},
    {2, -8, {6, -15, 5}, 2},
    {3, -16, {-1, 1}, 1},
    {3, -12, {-3, 3}, 1},
    {4, -16, {1}, 1},
};

static const std::vector<ClosedFamily> kTable5 = {
    {0, -5, {-1, 89, -145, 75, -15, 1}, 1},
    {1, -13, {0, -14, 23, -10, 1}, 24},
    {1, -12, {0, -18, 27, -10, 1}, 2},
    {1, -11, {0, -185, 212, -70, 7}, 6, true, {0, -185, 212, -280, 49}, 6,
     "printed 'n(n-5)(7n)^2-35n+37)/6'; exact value is n(n-5)(7n^2-35n+37)/6"},
    {1, -10, {24, -50, 35, -10, 1}, 6},
    {1, -9, {0, -120, 145, -50, 5}, 4},
    {1, -8, {0, -14, 23, -10, 1}, 6},
    {1, -7, {0, -131, 194, -70, 7}, 6, true, {0, -131, 194, -112, 49}, 6,
     "printed 'n(n-1)(7n)^2-63n+131)/6'; exact value is n(n-1)(7n^2-63n+131)/6"},
    {1, -6, {0, -30, 31, -10, 1}, 2},
    {1, -5, {24, -50, 35, -10, 1}, 24},
    {2, -19, {0, 5, -6, 1}, 6},
    {2, -17, {0, 32, -24, 4}, 3},
    {2, -15, {-6, 11, -6, 1}, 1},
    {2, -14, {0, 50, -42, 7}, 3, true, {0, 50, -42, 49}, 2,
     "printed 'n(7n)^2-42n+50)/2'; exact value is n(7n^2-42n+50)/3"},
    {2, -12, {0, 16, -12, 2}, 1},
    {2, -11, {0, 25, -30, 5}, 6},
    {2, -10, {-12, 62, -42, 7}, 3},
    {3, -23, {0, -3, 1}, 2},
    {3, -20, {4, -6, 2}, 1},
    {3, -18, {0, -6, 2}, 1},
    {3, -15, {12, -33, 11}, 2},
    {4, -25, {-1, 1}, 1},
    {4, -20, {-4, 4}, 1},
    {5, -25, {1}, 1},
};

static const std::vector<ClosedFamily> kTable6 = {
    {0, -6, {1, -415, 814, -545, 160, -21, 1}, 1},
    {1, -16, {0, 54, -105, 65, -15, 1}, 120},
    {1, -15, {0, 64, -120, 70, -15, 1}, 6},
    {1, -14, {0, 546, -967, 519, -105, 7}, 8},
    {1, -13, {0, 108, -162, 78, -15, 1}, 1},
    {1, -12, {-20, 104, -145, 75, -15, 1}, 4},
    {1, -11, {0, 648, -1030, 525, -105, 7}, 5, true, {0, 648, -1030, 525, -105, 7}, 4,
     "printed denominator 4; exact value needs 5"},
    {1, -10, {0, 84, -145, 75, -15, 1}, 4},
    {1, -9, {0, 68, -126, 72, -15, 1}, 1},
    {1, -8, {0, 606, -1039, 531, -105, 7}, 8},
    {1, -7, {0, 144, -180, 80, -15, 1}, 6},
    {1, -6, {-120, 274, -225, 85, -15, 1}, 120},
    {2, -24, {0, -14, 23, -10, 1}, 24},
    {2, -22, {0, -90, 135, -50, 5}, 8},
    {2, -20, {0, -105, 121, -40, 4}, 2},
    {2, -18, {40, -176, 199, -70, 7}, 4},
    {2, -17, {0, -60, 62, -20, 2}, 1},
    {2, -16, {0, -270, 405, -150, 15}, 8},
    {2, -15, {0, -80, 116, -40, 4}, 3},
    {2, -14, {0, -342, 379, -130, 13}, 8},
    {2, -13, {0, -36, 54, -20, 2}, 1},
    {2, -12, {20, -210, 217, -70, 7}, 4},
    {3, -30, {0, 5, -6, 1}, 6},
    {3, -27, {0, 40, -30, 5}, 3},
    {3, -23, {0, 24, -18, 3}, 1, true, {0, 12, -12, 3}, 1,
     "printed '3n(n-2)(n-2)'; exact value is 3n(n-2)(n-4)"},
    {3, -24, {-20, 45, -30, 5}, 2},
    {3, -21, {0, 80, -60, 10}, 3},
    {3, -20, {0, 15, -18, 3}, 2},
    {3, -18, {-60, 391, -282, 47}, 6},
    {4, -34, {0, -3, 1}, 2},
    {4, -30, {10, -15, 5}, 2},
    {4, -28, {0, -15, 5}, 2},
    {4, -24, {20, -57, 19}, 2},
    {5, -36, {-1, 1}, 1},
    {5, -30, {-5, 5}, 1},
    {6, -36, {1}, 1},
};

static const std::vector<ClosedFamily> kTable7 = {
    {0, -7, {-1, 2372, -5243, 4179, -1575, 301, -28, 1}, 1},
    {1, -19, {0, -264, 574, -435, 145, -21, 1}, 720},
    {1, -18, {0, -300, 640, -471, 151, -21, 1}, 24},
    {1, -17, {0, -7902, 16457, -11685, 3590, -483, 23}, 60},
    {1, -16, {0, -33456, 67166, -45369, 13319, -1743, 83}, 72},
    {1, -15, {0, -5908, 10644, -6573, 1817, -231, 11}, 16},
    {1, -14, {120, -5012, 9982, -6895, 2065, -273, 13}, 20},
    {1, -13, {0, -3115, 5908, -3857, 1120, -147, 7}, 6},
    {1, -12, {0, -5392, 10752, -7195, 2095, -273, 13}, 20},
    {1, -11, {0, -3552, 7502, -5433, 1703, -231, 11}, 16},
    {1, -10, {0, -31644, 64652, -44589, 13241, -1743, 83}, 72},
    {1, -9, {0, -11292, 21467, -13485, 3770, -483, 23}, 60},
    {1, -8, {0, -840, 1198, -651, 169, -21, 1}, 24},
    {1, -7, {720, -1764, 1624, -735, 175, -21, 1}, 720},
    {2, -29, {0, 54, -105, 65, -15, 1}, 120},
    {2, -27, {0, 64, -120, 70, -15, 1}, 5},
    {2, -25, {0, 623, -1104, 593, -120, 8}, 6},
    {2, -23, {0, 1818, -2745, 1325, -255, 17}, 8},
    {2, -22, {0, 734, -1365, 785, -165, 11}, 10},
    {2, -21, {-120, 1450, -2255, 1135, -225, 15}, 8},
    {2, -20, {0, 600, -810, 385, -75, 5}, 3},
    {2, -19, {0, 5978, -10605, 5705, -1155, 77}, 20},
    {2, -18, {0, 84, -145, 75, -15, 1}, 1},
    {2, -17, {0, 3976, -6965, 3675, -735, 49}, 20},
    {2, -16, {0, 440, -690, 365, -75, 5}, 3},
    {2, -15, {0, 1666, -2933, 1561, -315, 21}, 8},
    {2, -14, {-60, 1334, -1845, 865, -165, 11}, 10},
    {3, -37, {0, -14, 23, -10, 1}, 24},
    {3, -34, {0, -54, 81, -30, 3}, 4},
    {3, -31, {0, -1910, 2207, -730, 73}, 24},
    {3, -30, {0, -14, 23, -10, 1}, 4},
    {3, -29, {0, -126, 189, -70, 7}, 4},
    {3, -28, {120, -250, 175, -50, 5}, 6},
    {3, -27, {0, -660, 745, -250, 25}, 4},
    {3, -26, {0, -126, 189, -70, 7}, 4, true, {0, 0, -126, 189, -70, 7}, 4,
     "printed '7n(n-1)(n-3)(n-6) n/4' (stray factor n); exact value is 7n(n-1)(n-3)(n-6)/4"},
    {3, -25, {0, -133, 196, -70, 7}, 2},
    {3, -24, {0, -150, 155, -50, 5}, 2},
    {3, -22, {0, -98, 161, -70, 7}, 12},
    {3, -23, {0, -630, 945, -350, 35}, 8},
    {3, -21, {120, -1958, 2233, -750, 75}, 8},
    {4, -43, {0, 5, -6, 1}, 6},
    {4, -39, {0, 16, -12, 2}, 1},
    {4, -36, {0, 5, -6, 1}, 1},
    {4, -35, {-30, 55, -30, 5}, 2},
    {4, -34, {0, 112, -84, 14}, 3},
    {4, -32, {0, 40, -30, 5}, 1},
    {4, -31, {0, 35, -42, 7}, 3},
    {4, -28, {-60, 425, -312, 52}, 3, true, {-60, 0, 113, 52}, 3,
     "printed '(52n^3-312n^2+425n^2-60)/3'; exact value is (52n^3-312n^2+425n-60)/3"},
    {5, -47, {0, -3, 1}, 2},
    {5, -42, {6, -9, 3}, 1},
    {5, -40, {0, -9, 3}, 1},
    {5, -35, {30, -87, 29}, 2},
    {6, -49, {-1, 1}, 1},
    {6, -42, {-6, 6}, 1},
    {7, -49, {1}, 1},
};

}  // namespace

std::int64_t ClosedFamily::mult_at(std::int64_t n) const {
  return eval_poly(mult_num, mult_den, n);
}

Rational ClosedFamily::printed_mult_at(std::int64_t n) const {
  const std::vector<std::int64_t>& num = printed_suspect ? printed_num : mult_num;
  const std::int64_t den = printed_suspect ? printed_den : mult_den;
  BigInt acc = 0;
  for (auto it = num.rbegin(); it != num.rend(); ++it) acc = acc * n + *it;
  return Rational(acc) / den;
}

const std::vector<ClosedFamily>& closed_form_table(int k) {
  switch (k) {
    case 2: return kTable2;
    case 3: return kTable3;
    case 4: return kTable4;
    case 5: return kTable5;
    case 6: return kTable6;
    case 7: return kTable7;
    default: throw input_error("closed-form tables cover k = 2..7");
  }
}

std::int64_t closed_form_min_n(int k) {
  switch (k) {
    case 2: return 3;
    case 3: return 4;
    case 4: return 5;
    case 5: return 10;
    case 6: return 12;
    case 7: return 14;
    default: throw input_error("closed-form tables cover k = 2..7");
  }
}

Spectrum closed_form_spectrum(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) throw input_error("closed_form_spectrum requires 0 <= k <= n");
  if (k > 7) throw unsupported_range("closed forms are available for k <= 7");
  const std::int64_t nu = falling_factorial_i64(n, static_cast<int>(k));

  if (n == k) {  // empty edge set: all eigenvalues zero
    Spectrum s;
    s.n = n;
    s.k = k;
    s.nu = nu;
    s.pairs = {{0, nu}};
    return s;
  }
  if (k == 0) {  // one empty arrangement, no edges
    Spectrum s;
    s.n = n;
    s.k = 0;
    s.nu = 1;
    s.pairs = {{0, 1}};
    return s;
  }
  if (k == 1) {  // complete graph
    Spectrum s = merge_spectrum(n, k, nu, {{-1, n - 1}, {n - 1, 1}});
    s.validate();
    return s;
  }
  if (n < closed_form_min_n(static_cast<int>(k)))
    throw unsupported_range("n below the validity range of the closed form");

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& fam : closed_form_table(static_cast<int>(k)))
    pairs.emplace_back(fam.lambda_at(n), fam.mult_at(n));
  Spectrum s = merge_spectrum(n, k, nu, std::move(pairs));
  s.validate();
  return s;
}

}  // namespace arng
