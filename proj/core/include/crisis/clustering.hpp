#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crisis/panel.hpp"

namespace crisis {

struct JaccardResult {
  double distance = 0.0;
  /// Neither series has a crisis year in the overlap: the distance is set to
  /// 0 and this flag raised so callers can report it.
  bool both_empty = false;
};

/// 1 - m11 / (m11 + m10 + m01) over the shared observed years; mutual
/// non-crisis years carry no information and are excluded from the union.
/// Throws Error when the overlap is empty.
JaccardResult jaccard_distance(const BinarySeries& a, const BinarySeries& b);

struct DissimilarityMatrix {
  std::vector<CountryLabel> labels;
  std::vector<double> values;  // k*k row-major, zero diagonal
  std::vector<std::pair<std::string, std::string>> empty_pairs;  // warnings

  std::size_t size() const { return labels.size(); }
  double at(std::size_t i, std::size_t j) const {
    return values[i * labels.size() + j];
  }
};

/// All pairwise Jaccard distances; a pair with no overlapping years aborts
/// with the offending pair named.
DissimilarityMatrix dissimilarity_matrix(const CrisisPanel& panel,
                                         unsigned threads = 0);

struct Merge {
  int left = 0;    // node id: leaves are 0..k-1, merge step t creates k+t
  int right = 0;
  double height = 0.0;
  int size = 0;    // leaves under the new node
};

struct Dendrogram {
  std::vector<CountryLabel> leaves;
  std::vector<Merge> merges;  // k-1 entries, heights nondecreasing

  int root_id() const {
    return static_cast<int>(leaves.size() + merges.size()) - 1;
  }
};

enum class LinkageVariant {
  Upgma,  // unweighted: mean over all cross-cluster leaf pairs
  Wpgma,  // weighted: mean of the two cluster-to-cluster means
};
std::string_view to_string(LinkageVariant v);
LinkageVariant parse_linkage(std::string_view name);

/// Agglomerates by minimal average inter-cluster dissimilarity. Ties are
/// broken by the lexicographically smallest (label, label) pair, where a
/// cluster is keyed by its smallest leaf code, so the result is invariant
/// under input permutation.
Dendrogram upgma(const DissimilarityMatrix& d,
                 LinkageVariant variant = LinkageVariant::Upgma);

struct ClusterCut {
  double height = 0.0;
  std::vector<std::vector<std::string>> groups;  // codes, sorted
};

/// Connected components after removing merges with height > `height`.
ClusterCut cut(const Dendrogram& tree, double height);

/// Midpoint of the largest gap between consecutive merge heights.
double largest_gap_cutoff(const Dendrogram& tree);

/// Parenthesized tree text with ultrametric branch lengths (a node sits at
/// half its merge height, so the path between two leaves equals their merge
/// height). Children are ordered by smallest descendant label.
std::string to_newick(const Dendrogram& tree);

/// CSV: step,left,right,height,size. Leaf nodes are printed as country
/// codes, internal nodes as node<step>.
std::string merges_csv(const Dendrogram& tree);

std::string cut_json(const ClusterCut& cut);

}  // namespace crisis
