// Command-line surface: build, query, access, lce, verify, stats.
// Queries are 1-based. Exit codes: 0 success, 1 domain error, 2 usage.
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "dsa/sa_index.hpp"

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.write(reinterpret_cast<const char*>(b.data()),
            std::streamsize(b.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

dsa::DeltaSaIndex load_index(const std::string& path) {
  return dsa::DeltaSaIndex::deserialize(read_file(path));
}

dsa::Text text_like_index(const dsa::DeltaSaIndex& idx,
                          const std::string& path) {
  dsa::Text t(read_file(path));
  if (idx.auto_sentinel()) t = t.with_appended_sentinel();
  if (t.n() != idx.n())
    throw std::runtime_error("verify: text length does not match the index");
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delta-SA compressed text index"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "build an index");
  std::string text_path, lz_path, out_path;
  bool append_sentinel = false;
  auto* tgrp = build->add_option_group("input");
  tgrp->add_option("--text", text_path, "raw text file");
  tgrp->add_option("--lz", lz_path, "LZ77-like parse file");
  tgrp->require_option(1);
  build->add_flag("--append-sentinel", append_sentinel,
                  "remap bytes b->b+1 and append symbol 0");
  build->add_option("-o,--output", out_path, "index file")->required();

  // query
  auto* query = app.add_subcommand("query", "SA / ISA queries");
  std::string q_index, q_kind;
  std::int64_t q_i = 0, q_count = 1;
  query->add_option("index", q_index)->required();
  query->add_option("kind", q_kind, "sa or isa")
      ->required()
      ->check(CLI::IsMember({"sa", "isa"}));
  query->add_option("i", q_i, "1-based rank/position")->required();
  query->add_option("--count", q_count, "answer this many consecutive queries");

  // access
  auto* access = app.add_subcommand("access", "random access T[i]");
  std::string a_index;
  std::int64_t a_i = 0;
  access->add_option("index", a_index)->required();
  access->add_option("i", a_i)->required();

  // lce
  auto* lce = app.add_subcommand("lce", "longest common extension");
  std::string l_index;
  std::int64_t l_j1 = 0, l_j2 = 0;
  bool l_rev = false;
  lce->add_option("index", l_index)->required();
  lce->add_option("j1", l_j1)->required();
  lce->add_option("j2", l_j2)->required();
  lce->add_flag("--rev", l_rev, "backward direction");

  // verify
  auto* verify = app.add_subcommand("verify", "check against brute force");
  std::string v_index, v_text;
  bool v_exhaustive = false;
  std::int64_t v_samples = 1000, v_seed = 0;
  verify->add_option("index", v_index)->required();
  verify->add_option("--text", v_text)->required();
  verify->add_flag("--exhaustive", v_exhaustive);
  verify->add_option("--samples", v_samples);
  verify->add_option("--seed", v_seed);

  // stats
  auto* stats = app.add_subcommand("stats", "index statistics");
  std::string s_index;
  stats->add_option("index", s_index)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) {
      dsa::BuildOptions opt;
      opt.append_sentinel = append_sentinel;
      dsa::DeltaSaIndex idx =
          !text_path.empty()
              ? dsa::DeltaSaIndex::build(dsa::Text(read_file(text_path)), opt)
              : dsa::DeltaSaIndex::build_from_parsing(
                    dsa::parsing_from_text_format([&] {
                      auto b = read_file(lz_path);
                      return std::string(b.begin(), b.end());
                    }()),
                    opt);
      write_file(out_path, idx.serialize());
      return 0;
    }
    if (query->parsed()) {
      auto idx = load_index(q_index);
      for (std::int64_t t = 0; t < q_count; ++t) {
        std::int64_t at = q_i + t;
        std::cout << (q_kind == "sa" ? idx.query_sa(at) : idx.query_isa(at))
                  << "\n";
      }
      return 0;
    }
    if (access->parsed()) {
      auto idx = load_index(a_index);
      std::cout << int(idx.access(a_i)) << "\n";
      return 0;
    }
    if (lce->parsed()) {
      auto idx = load_index(l_index);
      std::cout << idx.lce(l_j1, l_j2,
                           l_rev ? dsa::Direction::Backward
                                 : dsa::Direction::Forward)
                << "\n";
      return 0;
    }
    if (verify->parsed()) {
      auto idx = load_index(v_index);
      dsa::Text t = text_like_index(idx, v_text);
      auto sa = dsa::brute_suffix_array(t);
      auto isa = dsa::inverse_permutation(sa);
      auto check_one = [&](dsa::pos_t i) {
        if (idx.query_sa(i) != sa[size_t(i - 1)]) {
          std::cerr << "mismatch: SA[" << i << "]\n";
          return false;
        }
        dsa::pos_t j = sa[size_t(i - 1)];
        if (idx.query_isa(j) != isa[size_t(j - 1)]) {
          std::cerr << "mismatch: ISA[" << j << "]\n";
          return false;
        }
        return true;
      };
      if (v_exhaustive) {
        for (dsa::pos_t i = 1; i <= idx.n(); ++i)
          if (!check_one(i)) return 1;
      } else {
        std::mt19937_64 rng{std::uint64_t(v_seed)};
        for (std::int64_t s = 0; s < v_samples; ++s)
          if (!check_one(1 + dsa::pos_t(rng() % std::uint64_t(idx.n()))))
            return 1;
      }
      return 0;
    }
    if (stats->parsed()) {
      auto idx = load_index(s_index);
      const auto& st = idx.stats();
      std::cout << "n=" << st.n << "\n";
      std::cout << "delta_num=" << st.delta_num << "\n";
      std::cout << "delta_den=" << st.delta_den << "\n";
      std::cout << "z=" << st.z << "\n";
      std::cout << "rlslp_size=" << st.rlslp_size << "\n";
      std::cout << "levels=" << st.levels << "\n";
      std::cout << "bootstrap_entries=" << idx.bootstrap_entries() << "\n";
      std::cout << "auto_sentinel=" << (idx.auto_sentinel() ? 1 : 0) << "\n";
      for (dsa::pos_t k = 0; k < st.levels; ++k) {
        std::cout << "level_" << (k + 4) << "_runs="
                  << st.runs_per_level[size_t(k)] << "\n";
        std::cout << "level_" << (k + 4) << "_sss="
                  << st.sss_per_level[size_t(k)] << "\n";
        std::cout << "level_" << (k + 4) << "_roots="
                  << st.roots_per_level[size_t(k)] << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
