// Copyright 2026 The SynRES Pipeline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Naive reference implementations used as test oracles. They share nothing
// with the library beyond its plain data types: masks are unpacked to byte
// vectors and every quantity is recomputed pixel by pixel.

#ifndef SYNRES_TESTS_ORACLES_H_
#define SYNRES_TESTS_ORACLES_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "synres/mask.h"

namespace synres::oracle {

using Bits = std::vector<std::uint8_t>;

inline Bits unpack(const BinaryMask& m) {
  Bits out(static_cast<std::size_t>(m.width()) * m.height());
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) out[static_cast<std::size_t>(y) * m.width() + x] = m.at(x, y);
  }
  return out;
}

inline BinaryMask pack(int w, int h, const Bits& bits) {
  BinaryMask m(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (bits[static_cast<std::size_t>(y) * w + x]) m.set(x, y);
    }
  }
  return m;
}

inline Bits threshold(const RasterMask& r, double thr) {
  Bits out(r.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.values()[i] >= thr ? 1 : 0;
  return out;
}

struct Counts {
  std::uint64_t inter = 0;
  std::uint64_t uni = 0;
};

inline Counts count(const Bits& a, const Bits& b) {
  Counts c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    c.inter += (a[i] && b[i]) ? 1 : 0;
    c.uni += (a[i] || b[i]) ? 1 : 0;
  }
  return c;
}

inline double iou(const Bits& a, const Bits& b, double empty_value) {
  const Counts c = count(a, b);
  return c.uni == 0 ? empty_value : static_cast<double>(c.inter) / static_cast<double>(c.uni);
}

// masks[i][j]: image i, expression j. Mean over images of pairwise IoU with
// the empty-union case scoring 0; unit diagonal.
inline std::vector<std::vector<double>> miou(const std::vector<std::vector<Bits>>& masks) {
  const std::size_t m = masks.size();
  const std::size_t n = m == 0 ? 0 : masks[0].size();
  std::vector<std::vector<double>> out(n, std::vector<double>(n, 1.0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      double sum = 0.0;
      for (std::size_t i = 0; i < m; ++i) sum += iou(masks[i][a], masks[i][b], 0.0);
      out[a][b] = sum / static_cast<double>(m);
    }
  }
  return out;
}

// Per-pixel mean of the member rasters, then >= thr.
inline Bits average_refine(const std::vector<const RasterMask*>& members, double thr) {
  const std::size_t px = members.front()->values().size();
  Bits out(px);
  for (std::size_t i = 0; i < px; ++i) {
    double s = 0.0;
    for (const RasterMask* r : members) s += r->values()[i];
    out[i] = s / static_cast<double>(members.size()) >= thr ? 1 : 0;
  }
  return out;
}

// Connected components of the graph with an edge wherever value > tau,
// by exhaustive transitive closure. Components with fewer than `min_size`
// members are returned in `discarded`. Groups are sorted by first member.
struct Components {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> discarded;
};

inline Components components(const std::vector<std::vector<double>>& mat, double tau,
                             std::size_t min_size) {
  const std::size_t n = mat.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    reach[a][a] = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && mat[a][b] > tau) reach[a][b] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (reach[a][k] && reach[k][b]) reach[a][b] = true;
      }
    }
  }
  Components out;
  std::vector<bool> done(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t b = 0; b < n; ++b) {
      if (reach[a][b]) {
        comp.push_back(b);
        done[b] = true;
      }
    }
    if (comp.size() >= min_size) {
      out.groups.push_back(comp);
    } else {
      out.discarded.insert(out.discarded.end(), comp.begin(), comp.end());
    }
  }
  std::sort(out.discarded.begin(), out.discarded.end());
  return out;
}

inline Bits random_bits(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution d(density);
  Bits out(n);
  for (auto& b : out) b = d(rng) ? 1 : 0;
  return out;
}

inline BinaryMask random_mask(std::mt19937_64& rng, int w, int h, double density) {
  return pack(w, h, random_bits(rng, static_cast<std::size_t>(w) * h, density));
}

inline RasterMask random_raster(std::mt19937_64& rng, int w, int h) {
  std::uniform_real_distribution<float> u(0.0f, 1.0f);
  std::vector<float> v(static_cast<std::size_t>(w) * h);
  for (auto& x : v) x = u(rng);
  return RasterMask(w, h, std::move(v));
}

// Rectangle raster: `inside` on [x0, x1) x [y0, y1), `outside` elsewhere.
inline RasterMask rect_raster(int w, int h, int x0, int y0, int x1, int y1, float inside,
                              float outside) {
  std::vector<float> v(static_cast<std::size_t>(w) * h, outside);
  for (int y = std::max(0, y0); y < std::min(h, y1); ++y) {
    for (int x = std::max(0, x0); x < std::min(w, x1); ++x) v[static_cast<std::size_t>(y) * w + x] = inside;
  }
  return RasterMask(w, h, std::move(v));
}

inline std::size_t popcount(const Bits& b) { return std::accumulate(b.begin(), b.end(), std::size_t{0}); }

// 64-bit FNV-1a written out from its definition.
inline std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// RFC 4648 base64 with padding.
inline std::string base64(const std::string& in) {
  static const char* kAlphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  std::size_t i = 0;
  for (; i + 2 < in.size(); i += 3) {
    const std::uint32_t v = (static_cast<unsigned char>(in[i]) << 16) |
                            (static_cast<unsigned char>(in[i + 1]) << 8) |
                            static_cast<unsigned char>(in[i + 2]);
    for (int s = 18; s >= 0; s -= 6) out.push_back(kAlphabet[(v >> s) & 63]);
  }
  const std::size_t rest = in.size() - i;
  if (rest > 0) {
    std::uint32_t v = static_cast<unsigned char>(in[i]) << 16;
    if (rest == 2) v |= static_cast<unsigned char>(in[i + 1]) << 8;
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(rest == 2 ? kAlphabet[(v >> 6) & 63] : '=');
    out.push_back('=');
  }
  return out;
}

}  // namespace synres::oracle

#endif  // SYNRES_TESTS_ORACLES_H_
