#pragma once

#include "atype/graph.hpp"

// Hand-built benchmark networks used across the test suites. All of them
// follow the canonical id layout (inputs, then outputs, then internals).
namespace atype::figures {

// two-input AND, settles after two moments
AType and_network();

// delay + nand mix used for the step-by-step simulation checks
AType sequential_demo();

// columnwise XOR with all paths of length three
AType xor_network();

// n-identity built from doubled-arrow nand chains
AType identity_network(std::size_t n);

// n-way multiplexer (selector pins first)
AType mux_network(std::size_t n);

// n-carry sliding-window network
AType carry_network(std::size_t n);

// recombination fixture pair: a seven-node mother and an eight-node father
// with one natural acceptor/donor split
AType splice_mother();
AType splice_father();

// clamped inputs make this one's output flip forever
AType oscillator_network();

// output pinned at zero from moment two onward, input ignored
AType const_zero_network();

// input -> delay -> delay -> output(nand), one path
AType chain_network();

}  // namespace atype::figures
