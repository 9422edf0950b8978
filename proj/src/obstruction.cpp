/*
 * Copyright (C) 2026 The flipcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "flipcheck/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "flipcheck/oracles.hpp"
#include "flipcheck/rng.hpp"

namespace flipcheck {

namespace {

constexpr std::uint64_t kStreamSigma = 0x7369676d61;
constexpr std::uint64_t kStreamTable = 0x7461626c65;
constexpr std::uint64_t kStreamTape = 0x74617065;
constexpr std::uint64_t kStreamDecode = 0x6465636f6465;
constexpr std::uint64_t kStreamLabels = 0x6c6162656c73;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

std::uint64_t ceil_log2(std::uint64_t x) {
  std::uint64_t bits = 0;
  while ((std::uint64_t{1} << bits) < x) ++bits;
  return bits;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(value, &used);
    if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "on") return true;
  if (value == "0" || value == "false" || value == "off") return false;
  throw ConfigError("bad value for " + key + ": '" + value + "'");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::pair<std::string, std::string>> key_values(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    out.emplace_back(trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)));
  }
  return out;
}

std::vector<Query> queries_for(const Target& t, const ObstructionConfig& cfg, std::uint64_t seed) {
  QueryConfig qc;
  qc.count = cfg.queries_per_tape;
  qc.nonzero_count = cfg.nonzero_count;
  qc.sample_bits = cfg.sample_bits;
  qc.normalize = cfg.normalize;
  qc.det_mode = cfg.det_mode;
  return t.kind == Target::Kind::Perm ? gen_queries_P(t.n, qc, seed) : gen_queries_E(t.m, t.k, qc, seed);
}

}  // namespace

Shape Target::shape() const { return kind == Kind::Perm ? Shape::square(n) : Shape::block(m, k); }

std::uint64_t Target::degree() const { return kind == Kind::Perm ? n : efun_degree(m, k); }

BigInt Target::value(const MatrixAssignment& x) const { return kind == Kind::Perm ? permanent(x) : efun(x); }

std::string Target::serialize() const {
  if (kind == Kind::Perm) return "perm(" + std::to_string(n) + ")";
  return "efun(" + std::to_string(m) + "," + std::to_string(k) + ")";
}

Target Target::parse(std::string_view text) {
  const std::string s = trim(text);
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw ConfigError("target must look like perm(n) or efun(m,k)");
  const std::string name = s.substr(0, open);
  const std::string args = s.substr(open + 1, s.size() - open - 2);
  Target t;
  if (name == "perm") {
    t.kind = Kind::Perm;
    t.n = parse_u64("target", args);
    if (t.n == 0) throw ConfigError("perm target needs n >= 1");
  } else if (name == "efun") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw ConfigError("efun target needs efun(m,k)");
    t.kind = Kind::Efun;
    t.m = parse_u64("target", trim(args.substr(0, comma)));
    t.k = parse_u64("target", trim(args.substr(comma + 1)));
    if (t.m == 0 || t.k == 0) throw ConfigError("efun target needs m, k >= 1");
  } else {
    throw ConfigError("unknown target '" + name + "'");
  }
  return t;
}

std::size_t ObstructionConfig::effective_seed_bits() const {
  const std::size_t bits = seed_bits ? *seed_bits : ceil_log2(std::max<std::size_t>(cls.m, 2));
  if (bits > 16) throw ConfigError("seed_bits is capped at 16");
  return bits;
}

std::uint64_t ObstructionConfig::effective_f0_budget() const {
  if (f0_budget_bits) return *f0_budget_bits;
  const std::uint64_t s = target.arity() + cls.m;
  return 64 * s * s;
}

std::string ObstructionConfig::serialize() const {
  std::ostringstream out;
  out << "target=" << target.serialize() << "\n"
      << "class=" << cls.serialize() << "\n"
      << "seed_bits=" << effective_seed_bits() << "\n"
      << "queries_per_tape=" << queries_per_tape << "\n"
      << "nonzero_count=" << nonzero_count << "\n"
      << "sample_bits=" << sample_bits << "\n"
      << "normalize=" << (normalize ? 1 : 0) << "\n"
      << "det_mode=" << det_mode_name(det_mode) << "\n"
      << "generator_seed=" << generator_seed << "\n"
      << "ring=" << (ring.kind == RingConfig::Kind::Modular ? "modular" : "integer") << "\n"
      << "prime_bits=" << ring.prime_bits << "\n"
      << "primes=" << ring.primes << "\n"
      << "exact_recheck_degree=" << ring.exact_recheck_degree << "\n"
      << "f0_budget_bits=" << effective_f0_budget() << "\n"
      << "derive_budget_seconds=" << derive_budget_seconds << "\n";
  return out.str();
}

ObstructionConfig ObstructionConfig::parse(std::string_view text) {
  ObstructionConfig cfg;
  for (const auto& [key, value] : key_values(text)) {
    if (key == "target") cfg.target = Target::parse(value);
    else if (key == "class") cfg.cls = ClassParams::parse(value);
    else if (key == "seed_bits") cfg.seed_bits = parse_u64(key, value);
    else if (key == "queries_per_tape") cfg.queries_per_tape = parse_u64(key, value);
    else if (key == "nonzero_count") cfg.nonzero_count = parse_u64(key, value);
    else if (key == "sample_bits") cfg.sample_bits = parse_u64(key, value);
    else if (key == "normalize") cfg.normalize = parse_bool(key, value);
    else if (key == "det_mode") cfg.det_mode = parse_det_mode(value);
    else if (key == "generator_seed") cfg.generator_seed = parse_u64(key, value);
    else if (key == "ring") {
      if (value == "modular") cfg.ring.kind = RingConfig::Kind::Modular;
      else if (value == "integer") cfg.ring.kind = RingConfig::Kind::Integer;
      else throw ConfigError("ring must be modular or integer");
    } else if (key == "prime_bits") cfg.ring.prime_bits = parse_u64(key, value);
    else if (key == "primes") cfg.ring.primes = parse_u64(key, value);
    else if (key == "exact_recheck_degree") cfg.ring.exact_recheck_degree = parse_u64(key, value);
    else if (key == "f0_budget_bits") cfg.f0_budget_bits = parse_u64(key, value);
    else if (key == "derive_budget_seconds") {
      try {
        cfg.derive_budget_seconds = std::stod(value);
      } catch (const std::exception&) {
        throw ConfigError("bad value for derive_budget_seconds");
      }
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  cfg.effective_seed_bits();
  if (cfg.cls.n != cfg.target.arity())
    throw ConfigError("class has " + std::to_string(cfg.cls.n) + " inputs but the target has " +
                      std::to_string(cfg.target.arity()));
  return cfg;
}

DesignParams default_design_params() { return DesignParams::from_log_scale({8, 2, 3, 6}); }

std::vector<std::uint64_t> generator_tape(const Design& label, std::uint64_t generator_seed,
                                          std::uint64_t seed_index) {
  const auto& p = label.params;
  const std::uint64_t mask = p.l >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.l) - 1;
  const std::uint64_t sigma = derive_seed(generator_seed, kStreamSigma, seed_index) & mask;
  std::vector<std::uint64_t> tape((label.rows.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < label.rows.size(); ++i) {
    std::uint64_t restricted = 0;
    std::size_t out = 0;
    for (std::size_t e = 0; e < p.l; ++e) {
      if (!((label.rows[i] >> e) & 1)) continue;
      restricted |= ((sigma >> e) & 1) << out++;
    }
    if (derive_seed(generator_seed, kStreamTable, restricted) & 1) tape[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return tape;
}

std::uint64_t ObstructionCertificate::derived_digest() const {
  std::uint64_t h = fnv1a("derived");
  for (const auto& q : queries) h = fnv1a(q.key() + "\n", h);
  for (const auto& p : points) h = fnv1a(p.serialize(), h);
  return h;
}

std::string ObstructionCertificate::serialize() const {
  const std::string design = to_hex(encode_design(label));
  const std::string conf = config.serialize();
  std::ostringstream out;
  out << "FLIPCERT 1\n"
      << "hash=" << hex64(fnv1a(design + "\n" + conf)) << "\n"
      << "design=" << design << "\n"
      << conf << "derived=" << hex64(derived_digest()) << "\n"
      << "queries=" << queries.size() << "\n"
      << "points=" << points.size() << "\n";
  return out.str();
}

ObstructionCertificate ObstructionCertificate::parse(std::string_view text, std::size_t threads) {
  const auto nl = text.find('\n');
  const std::string header = trim(text.substr(0, nl));
  if (header.rfind("FLIPCERT", 0) != 0) throw MalformedEncoding("not a certificate file");
  if (header != "FLIPCERT 1") throw StaleCertificate("unsupported certificate version: " + header);
  std::string hash, design, derived, conf;
  for (const auto& [key, value] : key_values(nl == std::string_view::npos ? "" : text.substr(nl + 1))) {
    if (key == "hash") hash = value;
    else if (key == "design") design = value;
    else if (key == "derived") derived = value;
    else if (key == "queries" || key == "points") continue;
    else conf += key + "=" + value + "\n";
  }
  if (hash.empty() || design.empty() || derived.empty()) throw MalformedEncoding("certificate lacks hash, design or derived");
  const auto cfg = ObstructionConfig::parse(conf);
  if (hex64(fnv1a(design + "\n" + cfg.serialize())) != hash)
    throw StaleCertificate("config hash mismatch; the certificate was edited or written by another version");
  auto cert = derive_certificate(decode_design(from_hex(design)), cfg, threads);
  if (hex64(cert.derived_digest()) != derived)
    throw StaleCertificate("re-derived query and point sets do not match the recorded digest");
  return cert;
}

ObstructionCertificate derive_certificate(const Design& label, const ObstructionConfig& cfg, std::size_t threads) {
  const auto verdict = verify_design(label);
  if (!verdict.valid()) throw InvalidDesign("label is not a design: " + verdict.describe());
  const auto t0 = Clock::now();
  const std::size_t seeds = std::size_t{1} << cfg.effective_seed_bits();
  std::vector<std::vector<Query>> per_seed(seeds);
  parallel_for(seeds, threads, [&](std::size_t j) {
    const auto tape = generator_tape(label, cfg.generator_seed, j);
    std::uint64_t h = derive_seed(cfg.generator_seed, kStreamTape, tape.size());
    for (auto w : tape) h = derive_seed(h, w);
    per_seed[j] = queries_for(cfg.target, cfg, h);
  });
  ObstructionCertificate cert;
  cert.label = label;
  cert.config = cfg;
  cert.tapes = seeds;
  for (auto& qs : per_seed)
    for (auto& q : qs) cert.queries.push_back(std::move(q));
  canonicalize(cert.queries);
  for (const auto& q : cert.queries) cert.points.insert(cert.points.end(), q.points.begin(), q.points.end());
  std::sort(cert.points.begin(), cert.points.end());
  cert.points.erase(std::unique(cert.points.begin(), cert.points.end()), cert.points.end());
  cert.derive_seconds = seconds_since(t0);
  return cert;
}

Counterexample decode_counterexample(const ObstructionCertificate& cert, const Circuit& c, const DecodeOptions& opts) {
  const auto& cfg = cert.config;
  if (c.num_inputs() != cfg.target.arity())
    throw ArityMismatch("circuit has " + std::to_string(c.num_inputs()) + " inputs, target " +
                        cfg.target.serialize() + " needs " + std::to_string(cfg.target.arity()));
  if (opts.enforce_class && c.measure(cfg.cls.regime) > cfg.cls.m)
    throw ConfigError("circuit " + std::string(regime_name(cfg.cls.regime)) + " " +
                      std::to_string(c.measure(cfg.cls.regime)) + " exceeds the class bound " +
                      std::to_string(cfg.cls.m));
  for (std::size_t i = 0; i < cert.queries.size(); ++i) {
    const auto run = run_queries(c, {cert.queries[i]}, cfg.ring, derive_seed(cfg.generator_seed, kStreamDecode, i));
    if (run.accept) continue;
    Counterexample cx;
    cx.query_index = i;
    cx.query = cert.queries[i];
    cx.points = cx.query.points;
    cx.detail = run.verdicts.front().detail;
    for (std::size_t t = 0; t < cx.points.size(); ++t) {
      if (evaluate(c, std::span<const BigInt>(cx.points[t].entries)) != cfg.target.value(cx.points[t])) {
        cx.direct_witness = t;
        break;
      }
    }
    return cx;
  }
  throw NoFailingQuery("all " + std::to_string(cert.queries.size()) +
                       " queries pass; the certificate does not obstruct this circuit");
}

bool counterexample_is_genuine(const Circuit& c, const Target& target, const Counterexample& cx) {
  if (cx.direct_witness) {
    const auto& x = cx.points.at(*cx.direct_witness);
    if (evaluate(c, std::span<const BigInt>(x.entries)) != target.value(x)) return true;
  }
  RingConfig exact;
  exact.kind = RingConfig::Kind::Integer;
  return !run_queries(c, {cx.query}, exact, 0).accept;
}

TrivialTable trivial_obstruction_table(const ClassParams& cls, const Target& target) {
  if (cls.n != target.arity()) throw ConfigError("class inputs do not match the target");
  const auto circuits = enumerate_circuits(cls);
  std::uint64_t d = target.degree();
  for (const auto& c : circuits) d = std::max(d, c.formal_degree());
  const std::size_t vars = target.arity();
  BigInt grid_size;
  mpz_ui_pow_ui(grid_size.get_mpz_t(), d + 1, vars);
  if (grid_size > (1 << 22)) throw BudgetExceeded("decision grid of " + grid_size.get_str() + " points is too large");
  const std::size_t side = d + 1;
  const std::size_t total = grid_size.get_ui();
  auto point_at = [&](std::size_t idx) {
    std::vector<BigInt> entries(vars);
    for (std::size_t v = vars; v-- > 0; idx /= side) entries[v] = static_cast<unsigned long>(idx % side);
    return MatrixAssignment(target.shape(), std::move(entries));
  };
  std::vector<std::optional<BigInt>> target_values(total);
  TrivialTable table;
  table.grid_side = side;
  for (const auto& c : circuits) {
    bool found = false;
    for (std::size_t idx = 0; idx < total && !found; ++idx) {
      auto x = point_at(idx);
      if (!target_values[idx]) target_values[idx] = target.value(x);
      if (evaluate(c, std::span<const BigInt>(x.entries)) != *target_values[idx]) {
        table.rows.push_back({c.serialize(), std::move(x)});
        found = true;
      }
    }
    if (!found) throw TargetComputable(c.serialize(), "a class circuit computes " + target.serialize());
  }
  return table;
}

const HarnessReport::Property* HarnessReport::find(std::string_view name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

bool HarnessReport::passed(std::string_view name) const {
  const auto* p = find(name);
  return p && p->ran && p->pass;
}

std::string HarnessReport::format() const {
  std::ostringstream out;
  for (const auto& p : properties)
    out << p.name << " " << (!p.ran ? "not-run" : p.pass ? "pass" : "fail") << (p.detail.empty() ? "" : " ")
        << p.detail << "\n";
  out << "contrast obstruction_points=" << obstruction_points << " obstruction_queries=" << obstruction_queries
      << " trivial_table_rows=" << table_rows << " class_size=" << class_size << "\n";
  return out.str();
}

namespace {

// Number of class circuits the certificate fails to obstruct.
std::size_t unobstructed(const ObstructionCertificate& cert, const std::vector<Circuit>& circuits,
                         std::size_t threads) {
  std::atomic<std::size_t> misses{0};
  parallel_for(circuits.size(), threads, [&](std::size_t i) {
    try {
      decode_counterexample(cert, circuits[i]);
    } catch (const NoFailingQuery&) {
      ++misses;
    }
  });
  return misses;
}

}  // namespace

HarnessReport harness_F(const Design& label, const ObstructionConfig& cfg, const HarnessOptions& opts) {
  HarnessReport rep;
  for (auto name : {"F0", "F1(a)", "F1(b)", "F2", "F3", "F4"}) rep.properties.push_back({name, false, false, ""});
  auto prop = [&](std::string_view name) -> HarnessReport::Property& {
    return *std::find_if(rep.properties.begin(), rep.properties.end(), [&](const auto& p) { return p.name == name; });
  };
  auto fmt = [](double s) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s << "s";
    return o.str();
  };

  {
    auto& f3 = prop("F3");
    const auto t0 = Clock::now();
    const auto verdict = verify_design(label);
    f3.ran = true;
    f3.pass = verdict.valid();
    f3.detail = (f3.pass ? "" : verdict.describe() + " ") + "verify_time=" + fmt(seconds_since(t0));
    if (!f3.pass) return rep;
  }
  {
    auto& f0 = prop("F0");
    f0.ran = true;
    const auto bits = encoded_bits(label.params);
    f0.pass = bits <= cfg.effective_f0_budget();
    f0.detail = "label_bits=" + std::to_string(bits) + " budget=" + std::to_string(cfg.effective_f0_budget());
  }
  {
    auto& f4 = prop("F4");
    f4.ran = true;
    const auto t0 = Clock::now();
    try {
      const auto d = build_design_greedy(label.params, opts.design_seed);
      f4.pass = verify_design(d).valid();
      f4.detail = "build_time=" + fmt(seconds_since(t0));
    } catch (const ConstructionFailed& e) {
      f4.detail = std::string(e.what()) + " build_time=" + fmt(seconds_since(t0));
    }
  }

  const auto cert = derive_certificate(label, cfg, opts.threads);
  rep.obstruction_points = cert.points.size();
  rep.obstruction_queries = cert.queries.size();
  {
    auto& f1a = prop("F1(a)");
    f1a.ran = true;
    bool deterministic = true;
    if (!opts.quick) {
      const auto again = derive_certificate(label, cfg, 1);
      deterministic = again.serialize() == cert.serialize() && again.queries == cert.queries &&
                      again.points == cert.points;
    }
    const std::size_t bound = cert.tapes * cfg.queries_per_tape * 2;
    f1a.pass = deterministic && cert.derive_seconds <= cfg.derive_budget_seconds && cert.points.size() <= bound;
    f1a.detail = std::string("deterministic=") + (deterministic ? "yes" : "no") + " derive_time=" +
                 fmt(cert.derive_seconds) + " budget=" + fmt(cfg.derive_budget_seconds) +
                 " points=" + std::to_string(cert.points.size()) + " bound=" + std::to_string(bound);
  }

  const auto circuits = enumerate_circuits(cfg.cls);
  rep.class_size = circuits.size();
  {
    auto& f1b = prop("F1(b)");
    f1b.ran = true;
    std::atomic<std::size_t> decoded{0}, genuine{0}, max_size{0};
    std::mutex first_mutex;
    std::optional<std::size_t> first_miss;
    parallel_for(circuits.size(), opts.threads, [&](std::size_t i) {
      try {
        const auto cx = decode_counterexample(cert, circuits[i]);
        ++decoded;
        if (counterexample_is_genuine(circuits[i], cfg.target, cx)) ++genuine;
        for (auto cur = max_size.load(); cx.points.size() > cur && !max_size.compare_exchange_weak(cur, cx.points.size());) {
        }
      } catch (const NoFailingQuery&) {
        std::lock_guard lock(first_mutex);
        if (!first_miss || i < *first_miss) first_miss = i;
      }
    });
    rep.max_counterexample_size = max_size;
    f1b.pass = decoded == circuits.size() && genuine == circuits.size() && max_size <= 2;
    f1b.detail = "decoded=" + std::to_string(decoded) + "/" + std::to_string(circuits.size()) +
                 " genuine=" + std::to_string(genuine) + " max_points=" + std::to_string(max_size);
    if (first_miss) f1b.detail += " unobstructed=\"" + circuits[*first_miss].serialize() + "\"";
  }
  {
    // The normalization point is shared by every label, so F2 certificates
    // leave it out and must obstruct the class without it.
    auto& f2 = prop("F2");
    f2.ran = true;
    ObstructionConfig f2cfg = cfg;
    f2cfg.normalize = false;
    std::set<MatrixAssignment> used;
    std::size_t valid = 0;
    for (std::size_t j = 0; j < opts.f2_labels; ++j) {
      Design lj;
      try {
        lj = build_design_greedy(label.params, derive_seed(opts.design_seed, kStreamLabels, j));
      } catch (const ConstructionFailed&) {
        continue;
      }
      const auto cj = derive_certificate(lj, f2cfg, opts.threads);
      if (unobstructed(cj, circuits, opts.threads) != 0) continue;
      ++valid;
      const bool disjoint = std::none_of(cj.points.begin(), cj.points.end(), [&](const auto& p) { return used.count(p); });
      if (!disjoint) continue;
      used.insert(cj.points.begin(), cj.points.end());
      ++rep.f2_disjoint;
    }
    f2.pass = rep.f2_disjoint >= 2;
    f2.detail = "labels=" + std::to_string(opts.f2_labels) + " valid=" + std::to_string(valid) +
                " pairwise_disjoint=" + std::to_string(rep.f2_disjoint);
  }
  try {
    rep.table_rows = trivial_obstruction_table(cfg.cls, cfg.target).rows.size();
  } catch (const Error&) {
    rep.table_rows = 0;
  }
  return rep;
}

}  // namespace flipcheck
