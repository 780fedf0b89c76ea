#include "ncres/anick/graph.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "ncres/anick/chains.hpp"
#include "ncres/groebner/groebner.hpp"

namespace ncres::anick {

ChainGraph build_chain_graph(std::span<const Word> obstructions, std::size_t alphabet_size) {
    gb::ObstructionIndex index{std::vector<Word>(obstructions.begin(), obstructions.end())};
    if (!index.is_antichain()) throw std::invalid_argument("obstructions do not form an antichain");

    ChainGraph g;
    std::map<Word, std::size_t, DegLexLess> ids;
    std::deque<std::size_t> todo;
    auto vertex = [&](const Word& w) {
        auto [it, inserted] = ids.emplace(w, g.vertices.size());
        if (inserted) {
            g.vertices.push_back(w);
            todo.push_back(it->second);
        }
        return it->second;
    };
    for (Letter a = 0; a < alphabet_size; ++a) vertex(Word{a});
    g.letter_count = alphabet_size;
    while (!todo.empty()) {
        const std::size_t v = todo.front();
        todo.pop_front();
        const Word from = g.vertices[v];
        for (auto& ext : tail_extensions(from, index)) {
            const std::size_t to = vertex(ext.tail);
            g.edges.push_back({v, to, index.words()[ext.obstruction]});
        }
    }
    return g;
}

std::uint64_t count_chain_paths(const ChainGraph& graph, std::size_t length, std::size_t deg_max) {
    if (deg_max == 0) return 0;
    // ways[v][d]: paths ending at v whose spelled word has degree d.
    std::vector<std::vector<std::uint64_t>> ways(graph.vertices.size(), std::vector<std::uint64_t>(deg_max + 1, 0));
    for (std::size_t v = 0; v < graph.letter_count; ++v) ways[v][1] = 1;
    for (std::size_t step = 0; step < length; ++step) {
        std::vector<std::vector<std::uint64_t>> next(graph.vertices.size(),
                                                     std::vector<std::uint64_t>(deg_max + 1, 0));
        for (const auto& e : graph.edges) {
            const std::size_t grow = graph.vertices[e.to].degree();
            for (std::size_t d = 1; d + grow <= deg_max; ++d) next[e.to][d + grow] += ways[e.from][d];
        }
        ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (const auto& row : ways) {
        for (auto c : row) total += c;
    }
    return total;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string to_dot(const ChainGraph& graph, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "digraph chains {\n";
    out << "  rankdir=LR;\n";
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        out << "  v" << v << " [label=" << quoted(format_word(graph.vertices[v], alphabet))
            << (v < graph.letter_count ? ", shape=box" : ", shape=ellipse") << "];\n";
    }
    for (const auto& e : graph.edges) {
        out << "  v" << e.from << " -> v" << e.to << " [label=" << quoted(format_word(e.obstruction, alphabet))
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ncres::anick
