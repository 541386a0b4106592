#include "fris/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fris/bench.hpp"
#include "fris/dynamics.hpp"
#include "fris/generator.hpp"
#include "fris/io.hpp"
#include "fris/reduction.hpp"
#include "fris/render.hpp"

namespace fris::cli {
namespace {

ValueEq make_eq(const std::string& epsilon_text) {
  if (epsilon_text.empty()) return {};
  return ValueEq{FuzzyValue::parse(epsilon_text, FuzzyValue::kMaxScale)};
}

std::vector<FuzzyValue> parse_grid(const std::string& csv) {
  std::vector<FuzzyValue> grid;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    grid.push_back(FuzzyValue::parse(item, FuzzyValue::kMaxScale));
  }
  if (grid.empty()) throw Error("--values needs at least one grade");
  return grid;
}

void emit(std::ostream& out, const std::optional<std::string>& path,
          const std::string& text) {
  if (path) {
    std::ofstream file(*path);
    if (!file) throw Error("cannot write file: " + *path);
    file << text;
  } else {
    out << text;
  }
}

struct EditSummary {
  std::string kind;
  std::size_t objects_before, objects_after;
  std::size_t relations_before, relations_after;
  std::size_t image_before, image_after;
  bool fell_back;
};

void print_summary(std::ostream& out, const EditSummary& s) {
  out << s.kind << " applied\n"
      << "  objects:       " << s.objects_before << " -> " << s.objects_after << '\n'
      << "  relations:     " << s.relations_before << " -> " << s.relations_after
      << '\n'
      << "  image objects: " << s.image_before << " -> " << s.image_after << '\n'
      << "  fell back to full recompression: " << (s.fell_back ? "yes" : "no")
      << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"compression of fuzzy relation information systems"};
  app.require_subcommand(1);
  int rc = 0;

  std::string input, mode_text = "row", epsilon, prefix = "y";
  std::string criterion_text = "partition";
  std::string state_path, payload_path;
  std::optional<std::string> state_out, image_out, file_out;
  std::optional<std::string> prefix_override;
  int scale = FuzzyValue::kDefaultScale;
  bool greedy = false;

  auto add_scale = [&](CLI::App* cmd) {
    cmd->add_option("--scale", scale, "Maximum fraction digits accepted")
        ->check(CLI::Range(1, static_cast<int>(FuzzyValue::kMaxScale)))
        ->capture_default_str();
  };

  auto* compress_cmd =
      app.add_subcommand("compress", "Compress a system through its quotient map");
  compress_cmd->add_option("input", input, "System JSON file")->required();
  compress_cmd->add_option("--mode", mode_text, "row or strict")->capture_default_str();
  compress_cmd->add_option("--epsilon", epsilon,
                           "Group grades within this distance (display only)");
  compress_cmd->add_option("--prefix", prefix, "Image object label prefix")
      ->capture_default_str();
  compress_cmd
      ->add_option("--state", state_out,
                   "Write the compression state here (exact grouping only)");
  compress_cmd->add_option("--out", image_out, "Write the image system here");
  add_scale(compress_cmd);
  compress_cmd->callback([&] {
    RelationSystem sys = load_system(input, {scale});
    ValueEq eq = make_eq(epsilon);
    if (state_out && !eq.exact()) {
      throw Error("states are exact; --state cannot be combined with --epsilon");
    }
    Mode mode = parse_mode(mode_text);
    CompressedSystem compressed = compress(sys, mode, prefix, eq);
    out << render_compressed(compressed);
    if (state_out) {
      CompressionState state;
      state.source = sys;
      state.compressed = compressed;
      state.mode = mode;
      state.image_prefix = prefix;
      save_state(state, *state_out);
      out << "state written to " << *state_out << '\n';
    }
    if (image_out) {
      save_system(compressed.image, *image_out);
      out << "image written to " << *image_out << '\n';
    }
  });

  auto* partition_cmd =
      app.add_subcommand("partition", "Show the partitions a system induces");
  partition_cmd->add_option("input", input, "System JSON file")->required();
  partition_cmd->add_option("--mode", mode_text, "row or strict")
      ->capture_default_str();
  partition_cmd->add_option("--epsilon", epsilon,
                            "Group grades within this distance");
  add_scale(partition_cmd);
  partition_cmd->callback([&] {
    RelationSystem sys = load_system(input, {scale});
    PartitionCache cache = system_partition(sys, parse_mode(mode_text),
                                            make_eq(epsilon));
    out << render_partition_grid(sys, cache) << '\n';
    for (std::size_t k = 0; k < sys.relations.size(); ++k) {
      out << sys.relations[k].name << ": "
          << render_partition(sys.universe, cache.per_relation[k]) << '\n';
    }
    out << "combined: " << render_partition(sys.universe, cache.combined) << '\n';
  });

  auto* reduce_cmd =
      app.add_subcommand("reduce", "Find relation subfamilies that preserve the system");
  reduce_cmd->add_option("input", input, "System JSON file")->required();
  reduce_cmd->add_option("--criterion", criterion_text, "partition or meet")
      ->capture_default_str();
  reduce_cmd->add_flag("--greedy", greedy,
                       "Heuristic search: one preserving subfamily, fast");
  reduce_cmd->add_option("--mode", mode_text, "row or strict")->capture_default_str();
  reduce_cmd->add_option("--epsilon", epsilon, "Group grades within this distance");
  add_scale(reduce_cmd);
  reduce_cmd->callback([&] {
    RelationSystem sys = load_system(input, {scale});
    ReductResult result =
        reducts(sys, parse_criterion(criterion_text),
                greedy ? ReductSearch::greedy : ReductSearch::exhaustive,
                parse_mode(mode_text), make_eq(epsilon));
    if (greedy) {
      out << "greedy search: the result preserves the criterion but may not be "
             "minimal\n";
    }
    for (const auto& reduct : result.reducts) {
      out << "reduct: {";
      for (std::size_t i = 0; i < reduct.size(); ++i) {
        if (i > 0) out << ", ";
        out << reduct[i];
      }
      out << "}\n";
    }
    out << "core: {";
    for (std::size_t i = 0; i < result.core.size(); ++i) {
      if (i > 0) out << ", ";
      out << result.core[i];
    }
    out << "}\n";
  });

  auto* apply_cmd =
      app.add_subcommand("apply", "Apply an edit to a stored compression state");
  apply_cmd->require_subcommand(1);
  const char* apply_kinds[] = {"add-relations", "remove-relations", "add-objects",
                               "remove-objects"};
  for (const char* kind : apply_kinds) {
    auto* cmd = apply_cmd->add_subcommand(kind, "");
    cmd->add_option("payload", payload_path, "Edit JSON file")->required();
    cmd->add_option("--state", state_path, "Compression state to update")
        ->required();
    cmd->add_option("--prefix", prefix_override, "New image label prefix");
    add_scale(cmd);
    std::string kind_text = kind;
    cmd->callback([&, kind_text] {
      CompressionState state = load_state(state_path, {scale});
      EditDocument edit = load_edit(payload_path, {scale});
      if (to_string(edit.kind) != kind_text) {
        throw Error("payload is a " + to_string(edit.kind) +
                    " edit, but the subcommand is " + kind_text);
      }
      EditSummary summary;
      summary.kind = kind_text;
      summary.objects_before = state.source.size();
      summary.relations_before = state.source.relations.size();
      summary.image_before = state.compressed.image.universe.size();
      CompressionState next;
      switch (edit.kind) {
        case EditKind::add_relations:
          next = add_relations(state, edit.relations, prefix_override);
          break;
        case EditKind::remove_relations:
          next = remove_relations(state, edit.names, prefix_override);
          break;
        case EditKind::add_objects:
          next = add_objects(state, edit.extension, prefix_override).state;
          break;
        case EditKind::remove_objects:
          next = remove_objects(state, edit.names, prefix_override).state;
          break;
      }
      summary.objects_after = next.source.size();
      summary.relations_after = next.source.relations.size();
      summary.image_after = next.compressed.image.universe.size();
      summary.fell_back = next.fell_back_to_scratch;
      save_state(next, state_path);
      print_summary(out, summary);
    });
  }

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check a state against recompression from scratch");
  verify_cmd->add_option("--state", state_path, "Compression state JSON file")
      ->required();
  add_scale(verify_cmd);
  verify_cmd->callback([&] {
    CompressionState state = load_state(state_path, {scale});
    CompressedSystem oracle =
        scratch_oracle(state.source, state.mode, state.image_prefix);
    if (equivalent(state.compressed, oracle)) {
      out << "state matches recompression from scratch\n";
    } else {
      out << "state DIFFERS from recompression from scratch\n"
          << "stored classes:   " << render_partition(state.source.universe,
                                                      state.combined())
          << '\n'
          << "scratch classes:  "
          << render_partition(state.source.universe, oracle.cache.combined) << '\n';
      rc = 1;
    }
  });

  std::uint64_t seed = 1;
  std::size_t gen_k = 4, gen_n = 8, gen_m = 3;
  std::string values_csv;
  auto* gen_cmd =
      app.add_subcommand("gen", "Generate a system with a known compression");
  gen_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("-k,--image-size", gen_k, "Classes to recover")
      ->capture_default_str();
  gen_cmd->add_option("-n,--size", gen_n, "Objects")->capture_default_str();
  gen_cmd->add_option("-m,--relations", gen_m, "Relations")->capture_default_str();
  gen_cmd->add_option("--values", values_csv,
                      "Comma separated grades to draw from (default 0.1..0.9)");
  gen_cmd->add_option("--out", file_out, "Write the system here");
  gen_cmd->callback([&] {
    PullbackSpec spec;
    spec.image_size = gen_k;
    spec.size = gen_n;
    spec.relation_count = gen_m;
    spec.seed = seed;
    if (!values_csv.empty()) spec.grid = parse_grid(values_csv);
    RelationSystem sys = gen_pullback(spec);
    emit(out, file_out,
         system_to_string(sys, "generated: compresses to " +
                                   std::to_string(gen_k) + " classes"));
  });

  BenchConfig bench_config;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time incremental edits against recompression from scratch");
  bench_cmd->add_option("--seed", bench_config.seed, "Random seed")
      ->capture_default_str();
  bench_cmd->add_option("--instances", bench_config.instances, "Instances per edit")
      ->capture_default_str();
  bench_cmd->add_option("-n,--size", bench_config.size, "Objects")
      ->capture_default_str();
  bench_cmd->add_option("-m,--relations", bench_config.relation_count, "Relations")
      ->capture_default_str();
  bench_cmd
      ->add_option("-t,--edit-size", bench_config.edit_size,
                   "Relations or objects touched per edit")
      ->capture_default_str();
  bench_cmd->add_option("-k,--image-size", bench_config.image_size, "Classes")
      ->capture_default_str();
  bench_cmd->add_option("--out", file_out, "Write the CSV here");
  bench_cmd->callback([&] {
    std::vector<BenchRow> rows = run_bench(bench_config);
    emit(out, file_out, bench_csv(rows));
    for (const auto& row : rows) {
      if (!row.equivalent_result) {
        err << "bench: " << row.edit_kind
            << " produced a compression that differs from scratch\n";
        rc = 1;
      }
    }
  });

  std::vector<const char*> argv;
  argv.push_back("fris");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}

}  // namespace fris::cli
