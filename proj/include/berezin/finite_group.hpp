#pragma once

#include <string>
#include <vector>

namespace berezin {

// Finite group given by its full multiplication table.  Factories validate
// the group laws on construction.
struct FiniteGroup {
    std::string name;
    int order = 0;
    int identity = 0;
    std::vector<std::vector<int>> product;  // product[g][h] = g*h
    std::vector<int> inverse;

    int mul(int g, int h) const { return product[g][h]; }
    int inv(int g) const { return inverse[g]; }

    // Throws std::logic_error when associativity, identity or inverse laws fail.
    void validate() const;
};

FiniteGroup make_cyclic(int n);     // n >= 1
FiniteGroup make_dihedral(int n);   // n >= 3; order 2n
FiniteGroup make_symmetric3();      // permutations of 3 letters
FiniteGroup make_quaternion8();     // {±1, ±i, ±j, ±k}
FiniteGroup make_frobenius21();     // <a,b | a^7 = b^3 = e, b a b^-1 = a^2>

// Parses "cyclic(6)", "dihedral(4)", "symmetric3", "quaternion8",
// "frobenius21".  Unknown spec -> std::invalid_argument.
FiniteGroup make_group(const std::string& spec);

// Elements commuting with everything; brute force.
std::vector<int> center(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

}
