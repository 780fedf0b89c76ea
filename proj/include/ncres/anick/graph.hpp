#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncres/word/alphabet.hpp"
#include "ncres/word/word.hpp"

namespace ncres::anick {

/// Chain-generation graph. Vertices are tails (the letters are the level-0
/// tails); an edge from tail t' to tail t exists when t' t ends with an
/// obstruction that starts inside t' and contains no other obstruction.
/// Paths of length n leaving a letter vertex spell the n-chains.
struct ChainGraph {
    struct Edge {
        std::size_t from;
        std::size_t to;
        Word obstruction;
    };

    std::vector<Word> vertices;  ///< letters first (by code), then tails in discovery order
    std::size_t letter_count = 0;
    std::vector<Edge> edges;
};

ChainGraph build_chain_graph(std::span<const Word> obstructions, std::size_t alphabet_size);

/// Number of paths with `length` edges starting at a letter vertex whose
/// spelled word (the letter followed by the tails) has degree <= deg_max.
std::uint64_t count_chain_paths(const ChainGraph& graph, std::size_t length, std::size_t deg_max);

/// Graphviz rendering; deterministic for a fixed graph.
std::string to_dot(const ChainGraph& graph, const Alphabet& alphabet);

}  // namespace ncres::anick
