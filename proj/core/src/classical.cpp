#include "drac/classical.hpp"

namespace drac {

namespace {

// Per-(x,y) correct-answer bits packed so a strategy's success count is a
// popcount-free accumulation over 24 cells.
struct TaskCells {
  std::uint8_t f[2][2][2][3];
};

TaskCells cells_of(const TaskSpec& task) {
  TaskCells c{};
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y = 0; y < 3; ++y) c.f[x0][x1][x2][y] = static_cast<std::uint8_t>(task.f(x0, x1, x2, y));
  return c;
}

}  // namespace

ClassicalOptimum classical_optimum(const TaskSpec& task) {
  const TaskCells c = cells_of(task);
  ClassicalOptimum best;
  best.num = -1;
  for (int enc = 0; enc < 16; ++enc) {
    for (int rel = 0; rel < 16; ++rel) {
      // m2 as a function of (x0,x1,x2)
      std::uint8_t m2[2][2][2];
      for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
          const int m1 = (enc >> (2 * x0 + x1)) & 1;
          for (int x2 = 0; x2 < 2; ++x2) m2[x0][x1][x2] = static_cast<std::uint8_t>((rel >> (2 * m1 + x2)) & 1);
        }
      // the decoder decomposes over (m2, y): count per cell and take the max bit
      int cnt[2][3][2] = {};  // [m2][y][z]
      for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
          for (int x2 = 0; x2 < 2; ++x2)
            for (int y = 0; y < 3; ++y) cnt[m2[x0][x1][x2]][y][c.f[x0][x1][x2][y]]++;
      long long total = 0;
      std::uint8_t dec[6];
      for (int m = 0; m < 2; ++m)
        for (int y = 0; y < 3; ++y) {
          // ties toward z = 0 keeps the witness lexicographically smallest
          if (cnt[m][y][0] >= cnt[m][y][1]) { dec[3 * m + y] = 0; total += cnt[m][y][0]; }
          else { dec[3 * m + y] = 1; total += cnt[m][y][1]; }
        }
      if (total > best.num) {
        best.num = total;
        for (int i = 0; i < 4; ++i) best.witness.encoder[i] = (enc >> i) & 1;
        for (int i = 0; i < 4; ++i) best.witness.relay[i] = (rel >> i) & 1;
        for (int i = 0; i < 6; ++i) best.witness.decoder[i] = dec[i];
      }
    }
  }
  best.value = static_cast<double>(best.num) / static_cast<double>(best.den);
  return best;
}

StandardRacOptimum standard_rac_classical_optimum(const TaskSpec& task) {
  const TaskCells c = cells_of(task);
  StandardRacOptimum best;
  best.num = -1;
  for (int enc = 0; enc < 256; ++enc) {
    int cnt[2][3][2] = {};
    for (int x0 = 0; x0 < 2; ++x0)
      for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2) {
          const int m = (enc >> (4 * x0 + 2 * x1 + x2)) & 1;
          for (int y = 0; y < 3; ++y) cnt[m][y][c.f[x0][x1][x2][y]]++;
        }
    long long total = 0;
    std::uint8_t dec[6];
    for (int m = 0; m < 2; ++m)
      for (int y = 0; y < 3; ++y) {
        if (cnt[m][y][0] >= cnt[m][y][1]) { dec[3 * m + y] = 0; total += cnt[m][y][0]; }
        else { dec[3 * m + y] = 1; total += cnt[m][y][1]; }
      }
    if (total > best.num) {
      best.num = total;
      for (int i = 0; i < 8; ++i) best.witness.encoder[i] = (enc >> i) & 1;
      for (int i = 0; i < 6; ++i) best.witness.decoder[i] = dec[i];
    }
  }
  best.value = static_cast<double>(best.num) / static_cast<double>(best.den);
  return best;
}

StandardRacOptimum standard_rac_classical_optimum() {
  const TaskSpec xy("x_y", [](int x0, int x1, int x2, int y) {
    const int x[3] = {x0, x1, x2};
    return x[y];
  });
  return standard_rac_classical_optimum(xy);
}

ParityProtocolOptimum parity_protocol_optimum(const TaskSpec& task) {
  const TaskCells c = cells_of(task);
  ParityProtocolOptimum best;
  best.num = -1;
  for (int am = 0; am < 4; ++am)
    for (int bm = 0; bm < 4; ++bm)
      for (int cm = 0; cm < 8; ++cm) {
        long long total = 0;
        for (int x0 = 0; x0 < 2; ++x0)
          for (int x1 = 0; x1 < 2; ++x1)
            for (int x2 = 0; x2 < 2; ++x2) {
              const int a = (am >> (x0 ^ x1)) & 1;
              const int m1 = a ^ x0;
              const int b = (bm >> (m1 ^ x2)) & 1;
              const int m2 = m1 ^ b;
              for (int y = 0; y < 3; ++y)
                if ((m2 ^ ((cm >> y) & 1)) == c.f[x0][x1][x2][y]) ++total;
            }
        if (total > best.num) {
          best.num = total;
          for (int i = 0; i < 2; ++i) best.alice[i] = (am >> i) & 1;
          for (int i = 0; i < 2; ++i) best.bob[i] = (bm >> i) & 1;
          for (int i = 0; i < 3; ++i) best.charlie[i] = (cm >> i) & 1;
        }
      }
  best.value = static_cast<double>(best.num) / static_cast<double>(best.den);
  return best;
}

}  // namespace drac
