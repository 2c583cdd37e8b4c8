#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "truemper/graph.hpp"

namespace truemper {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Reads "p n m", "e u v" (1-based), optional "w v weight", "#" comments.
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_string(const std::string& text);

/// Weight lines are written only for weights different from 1.
void write_graph(std::ostream& out, const Graph& g);
void write_graph(std::ostream& out, const WeightedGraph& g);
std::string format_weight(double w);

}  // namespace truemper
