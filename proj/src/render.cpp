#include "fris/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fris {
namespace {

std::size_t widest(const std::vector<std::string>& texts) {
  std::size_t w = 0;
  for (const auto& t : texts) w = std::max(w, t.size());
  return w;
}

}  // namespace

std::string render_block(const std::vector<std::string>& labels, const Block& block) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) out << ", ";
    out << labels[block[i]];
  }
  out << '}';
  return out.str();
}

std::string render_partition(const std::vector<std::string>& labels,
                             const Partition& partition) {
  std::ostringstream out;
  out << '{';
  for (std::size_t b = 0; b < partition.block_count(); ++b) {
    if (b > 0) out << ", ";
    out << render_block(labels, partition.blocks()[b]);
  }
  out << '}';
  return out.str();
}

std::string render_partition_grid(const RelationSystem& sys,
                                  const PartitionCache& cache) {
  std::vector<std::string> headers{"object"};
  for (const auto& r : sys.relations) headers.push_back(r.name);
  headers.push_back("combined");

  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  width[0] = std::max(width[0], widest(sys.universe));

  std::ostringstream out;
  for (std::size_t c = 0; c < headers.size(); ++c) {
    if (c > 0) out << "  ";
    out << std::left << std::setw(static_cast<int>(width[c])) << headers[c];
  }
  out << '\n';
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(width[0])) << sys.universe[i];
    for (std::size_t k = 0; k < cache.per_relation.size(); ++k) {
      out << "  " << std::left << std::setw(static_cast<int>(width[k + 1]))
          << cache.per_relation[k].block_index_of(i) + 1;
    }
    out << "  " << cache.combined.block_index_of(i) + 1 << '\n';
  }
  return out.str();
}

std::string render_mapping(const QuotientMap& map) {
  std::ostringstream out;
  for (std::size_t b = 0; b < map.image_size(); ++b) {
    out << map.image_labels[b] << " <- "
        << render_block(map.source_labels, map.partition.blocks()[b]) << '\n';
  }
  return out.str();
}

std::string render_relation(const std::vector<std::string>& labels,
                            const FuzzyRelation& relation) {
  std::size_t label_width = widest(labels);
  std::vector<std::size_t> col(labels.size());
  for (std::size_t j = 0; j < labels.size(); ++j) {
    col[j] = labels[j].size();
    for (std::size_t i = 0; i < relation.row_count(); ++i) {
      col[j] = std::max(col[j], relation.at(i, j).str().size());
    }
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(label_width)) << relation.name;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    out << "  " << std::right << std::setw(static_cast<int>(col[j])) << labels[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < relation.row_count(); ++i) {
    out << std::left << std::setw(static_cast<int>(label_width)) << labels[i];
    for (std::size_t j = 0; j < labels.size(); ++j) {
      out << "  " << std::right << std::setw(static_cast<int>(col[j]))
          << relation.at(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

std::string render_compressed(const CompressedSystem& compressed) {
  std::ostringstream out;
  out << "classes:\n";
  std::ostringstream mapping;
  mapping << render_mapping(compressed.map);
  std::istringstream lines(mapping.str());
  std::string line;
  while (std::getline(lines, line)) out << "  " << line << '\n';
  out << '\n';
  for (const auto& r : compressed.image.relations) {
    out << "image relation " << r.name << ":\n"
        << render_relation(compressed.image.universe, r) << '\n';
  }
  out << "consistency:\n";
  for (const auto& report : compressed.consistency) {
    out << "  " << report.relation << ": ";
    if (report.consistent) {
      out << "consistent\n";
      continue;
    }
    const auto& v = report.violations.front();
    out << "not constant on ("
        << compressed.image.universe[v.block_a] << ", "
        << compressed.image.universe[v.block_b] << "): " << v.relation << "("
        << v.u.label << ", " << v.v.label << ") = " << v.value_uv.str() << " but "
        << v.relation << "(" << v.s.label << ", " << v.t.label
        << ") = " << v.value_st.str();
    if (report.violations.size() > 1) {
      out << " (+" << report.violations.size() - 1 << " more)";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace fris
