#include "cubeknot/search.hpp"

#include <zlib.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace cubeknot {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool needs_knot(const GridFilter& f) {
  return f.single_component || f.tb || f.rot || f.writhe_range || f.jones_ref;
}

bool passes(const GridDiagram& g, const GridFilter& f) {
  if (needs_knot(f) && component_count(g) != 1) return false;
  if (!f.tb && !f.rot && !f.writhe_range && !f.jones_ref) return true;
  const int w = writhe(g);
  if (f.writhe_range && (w < f.writhe_range->first || w > f.writhe_range->second)) return false;
  if (f.tb || f.rot) {
    const auto inv = front_invariants(corner_census(g), w, f.hand);
    if (f.tb && inv.tb != *f.tb) return false;
    if (f.rot && inv.rot != *f.rot) return false;
  }
  if (f.jones_ref && jones_from_bracket(kauffman_bracket(g), w) != *f.jones_ref) return false;
  return true;
}

json census_json(const CornerCensus& c) {
  return {{"X_NE", c.x_ne}, {"X_NW", c.x_nw}, {"X_SE", c.x_se}, {"X_SW", c.x_sw},
          {"O_NE", c.o_ne}, {"O_NW", c.o_nw}, {"O_SE", c.o_se}, {"O_SW", c.o_sw}};
}

json header_json(const LegendrianClassSpec& spec, int n, const GridFilter& f) {
  json h;
  h["schema"] = "cubeknot.search";
  h["version"] = kRecordSchemaVersion;
  h["class"] = {{"p", spec.p}, {"tb", spec.tb}, {"rot", spec.rot}};
  h["n"] = n;
  h["hand"] = to_string(f.hand);
  h["jones_ref"] = f.jones_ref ? f.jones_ref->to_string() : "";
  h["writhe_range"] = f.writhe_range ? json::array({f.writhe_range->first, f.writhe_range->second}) : json();
  h["filter_hash"] = filter_hash(f);
  return h;
}

struct RankResult {
  std::vector<std::string> lines;
  std::uint64_t candidates = 0, lifted = 0, detected = 0, detected_and_lifted = 0;
  std::uint64_t identity_checked = 0, identity_failures = 0;
};

RankResult process_rank(const LegendrianClassSpec& spec, int n, const GridFilter& f, std::uint64_t rank) {
  RankResult out;
  const bool check_identities = n == spec.p + 2 && spec.rot == 2 - spec.p;
  enumerate_grids(n, f, rank, rank + 1, [&](const GridDiagram& g) {
    SearchRecord rec;
    rec.grid = g;
    rec.writhe = writhe(g);
    rec.census = corner_census(g);
    rec.invariants = front_invariants(rec.census, rec.writhe, f.hand);
    rec.detector = detect_type_configurations(g);
    auto found = lift_search(g, LiftMode::First);
    rec.lift_result = found.cube ? LiftResult::Found : LiftResult::None;
    rec.witness = std::move(found.cube);
    if (check_identities) {
      rec.bend_identities = check_bend_identities(g, spec.p).all_ok();
      ++out.identity_checked;
      out.identity_failures += !*rec.bend_identities;
    }
    ++out.candidates;
    out.lifted += rec.witness.has_value();
    out.detected += !rec.detector.empty();
    out.detected_and_lifted += !rec.detector.empty() && rec.witness.has_value();
    out.lines.push_back(record_to_json(rec));
  });
  return out;
}

constexpr char kCheckpointMagic[8] = {'C', 'K', 'N', 'T', 'C', 'K', 'P', '1'};
constexpr std::size_t kCheckpointFields = 10;

}  // namespace

std::uint64_t filter_hash(const GridFilter& f) {
  std::ostringstream s;
  s << "size=" << f.size << ";single=" << f.single_component << ";tb=" << (f.tb ? std::to_string(*f.tb) : "-")
    << ";rot=" << (f.rot ? std::to_string(*f.rot) : "-") << ";hand=" << to_string(f.hand)
    << ";jones=" << (f.jones_ref ? f.jones_ref->to_string() : "-") << ";writhe="
    << (f.writhe_range ? std::to_string(f.writhe_range->first) + "," + std::to_string(f.writhe_range->second) : "-");
  return fnv1a(s.str());
}

GridFilter class_filter(const LegendrianClassSpec& spec, int n) {
  GridFilter f;
  f.size = n;
  f.tb = spec.tb;
  f.rot = spec.rot;
  f.hand = Hand::Left;
  f.jones_ref = jones(canonical_kmin_grid(spec.p));
  f.writhe_range = std::make_pair(spec.tb + std::abs(spec.rot), spec.tb + n - 1);
  return f;
}

std::uint64_t permutation_count(int n) {
  std::uint64_t c = 1;
  for (int i = 2; i <= n; ++i) c *= static_cast<std::uint64_t>(i);
  return c;
}

std::vector<int> permutation_from_rank(int n, std::uint64_t rank) {
  if (rank >= permutation_count(n)) throw GridError("permutation rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  for (int k = n; k >= 1; --k) {
    const std::uint64_t block = permutation_count(k - 1);
    const auto i = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[i]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return out;
}

std::uint64_t enumerate_grids(int n, const GridFilter& filter, const GridVisitor& visit) {
  return enumerate_grids(n, filter, 0, permutation_count(std::clamp(n, 0, kMaxEnumerationSize)), visit);
}

std::uint64_t enumerate_grids(int n, const GridFilter& filter, std::uint64_t rank_lo, std::uint64_t rank_hi,
                              const GridVisitor& visit) {
  if (n < 1 || n > kMaxEnumerationSize) throw GridError("enumerate_grids: size outside the enumeration budget");
  if (filter.size != 0 && filter.size != n) throw GridError("enumerate_grids: filter size does not match n");
  rank_hi = std::min(rank_hi, permutation_count(n));
  std::uint64_t visited = 0;
  std::vector<int> o(static_cast<std::size_t>(n));
  for (std::uint64_t rank = rank_lo; rank < rank_hi; ++rank) {
    const std::vector<int> x = permutation_from_rank(n, rank);
    std::iota(o.begin(), o.end(), 0);
    do {
      bool clash = false;
      for (std::size_t i = 0; i < o.size() && !clash; ++i) clash = o[i] == x[i];
      if (clash) continue;
      GridDiagram g(x, o);
      if (!is_valid_grid(g) || !passes(g, filter)) continue;
      ++visited;
      visit(g);
    } while (std::next_permutation(o.begin(), o.end()));
  }
  return visited;
}

const char* to_string(LiftResult r) noexcept {
  switch (r) {
    case LiftResult::Found: return "found";
    case LiftResult::None: return "none";
    case LiftResult::Skipped: return "skipped";
  }
  return "?";
}

std::string record_to_json(const SearchRecord& r) {
  json j;
  j["grid"] = serialize_grid(r.grid);
  j["invariants"] = {{"writhe", r.writhe},
                     {"tb", r.invariants.tb},
                     {"rot", r.invariants.rot},
                     {"down_cusps", r.invariants.down_cusps},
                     {"up_cusps", r.invariants.up_cusps},
                     {"census", census_json(r.census)}};
  j["lift_result"] = to_string(r.lift_result);
  json det = json::array();
  for (const auto& m : r.detector)
    det.push_back({{"type", m.type},
                   {"bend", m.bend},
                   {"region", {m.region.col_lo, m.region.col_hi, m.region.row_lo, m.region.row_hi}},
                   {"path", m.path}});
  j["detector"] = std::move(det);
  j["witness"] = r.witness ? json(serialize_cube(*r.witness)) : json();
  if (r.bend_identities) j["bend_identities"] = *r.bend_identities;
  return j.dump();
}

std::string bound_conclusion(const ExperimentReport& r) {
  const std::string n = std::to_string(r.n);
  if (!r.complete) return "incomplete";
  if (r.lifted > 0) return "c_l <= " + n;
  if (r.candidates == 0) return "no candidates at size " + n;
  if (r.n == r.spec.p + 2) return "c_l > " + n;
  return "no lift at size " + n;
}

std::string report_to_json(const ExperimentReport& r) {
  json j;
  j["class"] = {{"p", r.spec.p}, {"tb", r.spec.tb}, {"rot", r.spec.rot}};
  j["n"] = r.n;
  j["candidates"] = r.candidates;
  j["lifted"] = r.lifted;
  j["detected"] = r.detected;
  j["detected_and_lifted"] = r.detected_and_lifted;
  j["identity_checked"] = r.identity_checked;
  j["identity_failures"] = r.identity_failures;
  j["complete"] = r.complete;
  j["bound_conclusion"] = r.conclusion;
  return json{{"summary", j}}.dump();
}

void write_checkpoint(const std::string& path, const Checkpoint& c) {
  const std::uint64_t fields[kCheckpointFields] = {c.filter_hash,       static_cast<std::uint64_t>(c.n),
                                                   c.next_rank,         c.jsonl_offset,
                                                   c.candidates,        c.lifted,
                                                   c.detected,          c.detected_and_lifted,
                                                   c.identity_checked,  c.identity_failures};
  std::string buf(kCheckpointMagic, sizeof kCheckpointMagic);
  buf.append(reinterpret_cast<const char*>(fields), sizeof fields);
  const auto crc = static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(buf.size())));
  buf.append(reinterpret_cast<const char*>(&crc), sizeof crc);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot read checkpoint " + path);
  const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::size_t body = sizeof kCheckpointMagic + kCheckpointFields * sizeof(std::uint64_t);
  if (buf.size() != body + sizeof(std::uint32_t)) throw CheckpointError("checkpoint has the wrong length");
  if (std::memcmp(buf.data(), kCheckpointMagic, sizeof kCheckpointMagic) != 0) throw CheckpointError("not a checkpoint");
  std::uint32_t stored = 0;
  std::memcpy(&stored, buf.data() + body, sizeof stored);
  const auto crc = static_cast<std::uint32_t>(crc32(0L, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(body)));
  if (crc != stored) throw CheckpointError("checkpoint checksum mismatch");
  std::uint64_t f[kCheckpointFields];
  std::memcpy(f, buf.data() + sizeof kCheckpointMagic, sizeof f);
  Checkpoint c;
  c.filter_hash = f[0];
  c.n = static_cast<int>(f[1]);
  c.next_rank = f[2];
  c.jsonl_offset = f[3];
  c.candidates = f[4];
  c.lifted = f[5];
  c.detected = f[6];
  c.detected_and_lifted = f[7];
  c.identity_checked = f[8];
  c.identity_failures = f[9];
  return c;
}

ExperimentReport run_experiment(const LegendrianClassSpec& spec, int n, const ExperimentOptions& opts) {
  if (spec.p < 3 || spec.p % 2 == 0) throw GridError("run_experiment: p must be odd and at least 3");
  if (n < 1 || n > kMaxEnumerationSize) throw GridError("run_experiment: size outside the enumeration budget");
  if (opts.resume && opts.checkpoint_path.empty()) throw CheckpointError("resume requires a checkpoint path");
  const GridFilter filter = class_filter(spec, n);
  const std::uint64_t hash = filter_hash(filter);
  const std::uint64_t total = permutation_count(n);

  ExperimentReport rep;
  rep.spec = spec;
  rep.n = n;
  std::uint64_t rank = 0;
  std::ofstream out;
  if (opts.resume) {
    const Checkpoint c = read_checkpoint(opts.checkpoint_path);
    if (c.filter_hash != hash || c.n != n) throw CheckpointError("checkpoint belongs to a different experiment");
    rank = c.next_rank;
    rep.candidates = c.candidates;
    rep.lifted = c.lifted;
    rep.detected = c.detected;
    rep.detected_and_lifted = c.detected_and_lifted;
    rep.identity_checked = c.identity_checked;
    rep.identity_failures = c.identity_failures;
    if (!opts.out_path.empty()) {
      if (!std::filesystem::exists(opts.out_path)) throw CheckpointError("output file missing for resume");
      std::filesystem::resize_file(opts.out_path, c.jsonl_offset);
      out.open(opts.out_path, std::ios::binary | std::ios::app);
    }
  } else if (!opts.out_path.empty()) {
    out.open(opts.out_path, std::ios::binary | std::ios::trunc);
    if (out) out << header_json(spec, n, filter).dump() << '\n';
  }
  if (!opts.out_path.empty() && !out) throw std::runtime_error("cannot open output " + opts.out_path);

  auto save = [&] {
    if (opts.checkpoint_path.empty()) return;
    out.flush();
    Checkpoint c{hash,        n,           rank,         opts.out_path.empty() ? 0 : static_cast<std::uint64_t>(out.tellp()),
                 rep.candidates, rep.lifted, rep.detected, rep.detected_and_lifted,
                 rep.identity_checked, rep.identity_failures};
    write_checkpoint(opts.checkpoint_path, c);
  };

  const int jobs = std::max(1, opts.jobs);
  const std::uint64_t every = std::max<std::uint64_t>(1, opts.checkpoint_every);
  const std::uint64_t stop = opts.stop_after ? std::min(total, rank + *opts.stop_after) : total;
  std::uint64_t since_save = 0;
  while (rank < stop) {
    const std::uint64_t batch = std::min({stop - rank, every - since_save, static_cast<std::uint64_t>(jobs) * 8});
    std::vector<RankResult> results(static_cast<std::size_t>(batch));
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < batch;) results[static_cast<std::size_t>(i)] = process_rank(spec, n, filter, rank + i);
    };
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    for (const auto& r : results) {
      for (const auto& line : r.lines)
        if (out.is_open()) out << line << '\n';
      rep.candidates += r.candidates;
      rep.lifted += r.lifted;
      rep.detected += r.detected;
      rep.detected_and_lifted += r.detected_and_lifted;
      rep.identity_checked += r.identity_checked;
      rep.identity_failures += r.identity_failures;
    }
    rank += batch;
    since_save += batch;
    if (since_save >= every) {
      save();
      since_save = 0;
    }
  }
  rep.ranks_done = rank;
  rep.complete = rank == total;
  save();
  rep.conclusion = bound_conclusion(rep);
  if (rep.complete && out.is_open()) out << report_to_json(rep) << '\n';
  return rep;
}

}  // namespace cubeknot
