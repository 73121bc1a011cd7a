#ifndef LOGFROB_FIELD_DESCRIPTOR_HPP
#define LOGFROB_FIELD_DESCRIPTOR_HPP

#include <string>

namespace logfrob {

// The two supported abelian families:
//   quadratic: Q(sqrt d), d squarefree, d not in {0,1}, studied at l = 2;
//   tower:     the degree-l^n layer of the cyclotomic l-tower (the subfield
//              of Q(zeta_{l^{n+1}}) of degree l^n), l an odd prime, n >= 1.
struct FieldDescriptor {
    enum class Kind { quadratic, tower };

    Kind kind;
    long long d = 0;   // quadratic only
    long ell = 0;      // quadratic: 2; tower: the odd prime
    int layer = 0;     // tower only

    // Reduces d to its squarefree part before storing.
    static FieldDescriptor quadratic(long long d);
    static FieldDescriptor tower(long ell, int layer);

    // Order of the Galois group: 2 or l^layer.
    long long degree() const;

    std::string label() const;
};

} // namespace logfrob

#endif
