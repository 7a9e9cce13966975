#include "cicy/chow_kernel.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <regex>
#include <sstream>

namespace cicy {

namespace {

const std::vector<std::vector<Int>> kFiveMultidegrees = {{5}, {2, 4}, {3, 3}, {2, 2, 3}, {2, 2, 2, 2}};

std::string join(const std::vector<Int>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string valid_options() {
  std::string out;
  for (const auto& m : kFiveMultidegrees) out += (out.empty() ? "" : ", ") + join(m, ",");
  return out;
}

}  // namespace

Validation validation_from_env() {
  const char* v = std::getenv("CICY_VALIDATION");
  if (v && std::string(v) == "lax") return Validation::Lax;
  return Validation::Strict;
}

CicyContext CicyContext::make(std::vector<Int> multidegree, Validation mode) {
  if (multidegree.empty()) throw Error("empty multidegree");
  std::sort(multidegree.begin(), multidegree.end());
  for (Int d : multidegree)
    if (d < 1) throw Error("multidegree entries must be positive");

  CicyContext ctx;
  ctx.multidegree_ = multidegree;
  ctx.n_ = static_cast<Int>(multidegree.size()) + 3;
  ctx.u_ = std::accumulate(multidegree.begin(), multidegree.end(), Int{1}, std::multiplies<>());
  ctx.v_ = ctx.u_ / 4;
  const Int sum = std::accumulate(multidegree.begin(), multidegree.end(), Int{0});

  const bool known = std::find(kFiveMultidegrees.begin(), kFiveMultidegrees.end(), multidegree) !=
                     kFiveMultidegrees.end();
  if (mode == Validation::Strict && !known)
    throw Error("unknown threefold " + join(multidegree, ",") + "; valid options: " + valid_options());
  if (sum != ctx.n_ + 1)
    throw Error("multidegree " + join(multidegree, ",") + " is not Calabi-Yau: sum " +
                std::to_string(sum) + " != " + std::to_string(ctx.n_ + 1));
  if (ctx.v_ + 4 != ctx.n_ + 1) {
    if (mode == Validation::Strict) throw Error("v + 4 != n + 1 for " + join(multidegree, ","));
    ctx.warnings_.push_back("floor(u/4) + 4 != n + 1 for " + join(multidegree, ",") +
                            "; the Euler characteristic formula is unverified here");
  }
  return ctx;
}

CicyContext CicyContext::parse(const std::string& text, Validation mode) {
  static const std::regex alias_u(R"(^X_?\{?(\d+)\}?$)");
  static const std::regex alias_multi(R"(^X_\{([0-9, ]+)\}$)");
  static const std::regex plain(R"(^[0-9, ]+$)");
  std::smatch m;
  std::string body;
  if (std::regex_match(text, m, alias_multi)) {
    body = m[1];
  } else if (std::regex_match(text, m, alias_u)) {
    if (mode != Validation::Strict) throw Error("degree alias " + text + " is ambiguous in lax mode");
    const Int u = std::stoll(m[1]);
    for (const auto& c : all())
      if (c.u() == u) return c;
    throw Error("unknown threefold " + text + "; valid options: " + valid_options());
  } else if (std::regex_match(text, plain)) {
    body = text;
  } else {
    throw Error("cannot parse threefold '" + text + "'; valid options: " + valid_options());
  }
  std::vector<Int> degrees;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty()) throw Error("cannot parse threefold '" + text + "'");
    degrees.push_back(std::stoll(tok));
  }
  return make(std::move(degrees), mode);
}

const std::vector<CicyContext>& CicyContext::all() {
  static const std::vector<CicyContext> five = [] {
    std::vector<CicyContext> out;
    for (const auto& m : kFiveMultidegrees) out.push_back(make(m));
    return out;
  }();
  return five;
}

std::string CicyContext::key() const { return join(multidegree_, ","); }

std::string CicyContext::label() const {
  if (multidegree_.size() == 1) return "X_" + std::to_string(multidegree_[0]);
  return "X_{" + key() + "}";
}

TruncatedClass ring_mul(const TruncatedClass& x, const TruncatedClass& y) {
  TruncatedClass z{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; i + j < 4; ++j) z[i + j] += x[i] * y[j];
  return z;
}

TruncatedClass ring_invert(const TruncatedClass& x) {
  if (x[0] == 0) throw Error("not invertible");
  // Solve x * y = 1 degree by degree.
  TruncatedClass y{};
  y[0] = 1 / x[0];
  for (std::size_t k = 1; k < 4; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += x[i] * y[k - i];
    y[k] = -acc / x[0];
  }
  return y;
}

std::string to_string(const TruncatedClass& x) {
  return "(" + to_string(x[0]) + ", " + to_string(x[1]) + ", " + to_string(x[2]) + ", " +
         to_string(x[3]) + ")";
}

BundleInvariants chern_from_resolution(const std::vector<Int>& sub_twists,
                                       const std::vector<Int>& quot_twists,
                                       const CicyContext& ctx) {
  const Int rank = static_cast<Int>(quot_twists.size()) - static_cast<Int>(sub_twists.size());
  if (rank <= 0) throw Error("resolution has nonpositive rank " + std::to_string(rank));
  TruncatedClass top = TruncatedClass::unit();
  for (Int q : quot_twists) top = ring_mul(top, TruncatedClass::linear(q));
  TruncatedClass bottom = TruncatedClass::unit();
  for (Int s : sub_twists) bottom = ring_mul(bottom, TruncatedClass::linear(s));
  const TruncatedClass c = ring_mul(top, ring_invert(bottom));
  return {rank, to_int(c[1]), to_int(c[2] * ctx.u()), to_int(c[3] * ctx.u())};
}

BundleInvariants chern_of_extension(Int a, Int b, Int z_degree, const CicyContext& ctx) {
  if (z_degree < 0) throw Error("negative degree for Z");
  return {2, a + b, a * b * ctx.u() + z_degree, std::nullopt};
}

Rational chi_rank2(const CicyContext& ctx, Int c1, Int c2) {
  const Rational u = ctx.u();
  const Rational a = c1;
  return u / 6 * a * a * a - a * c2 / 2 + a / 12 * (12 * (ctx.v() + 4) - 2 * u);
}

std::pair<Int, Int> twist_rank2(Int c1, Int c2, Int t, const CicyContext& ctx) {
  return {c1 + 2 * t, c2 + ctx.u() * t * c1 + ctx.u() * t * t};
}

Int h0_line_bundle(const CicyContext& ctx, Int t) {
  if (t < 0) return 0;
  const auto& d = ctx.multidegree();
  const std::size_t k = d.size();
  const Int n = ctx.ambient_dim();
  Int total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Int shift = 0;
    int parity = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) {
        shift += d[i];
        parity = -parity;
      }
    total += parity * binomial(n + t - shift, n);
  }
  return total;
}

Int max_rank_no_trivial(const std::vector<Int>& sub_twists, const CicyContext& ctx,
                        const std::vector<Int>& extra_quot_twists) {
  Int sections = 0;
  for (Int s : sub_twists) {
    if (s >= 0) throw Error("sub twists must be negative");
    sections += h0_line_bundle(ctx, -s);
  }
  return sections + static_cast<Int>(extra_quot_twists.size()) - static_cast<Int>(sub_twists.size());
}

}  // namespace cicy
