#include "verify/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace yso3 {

const std::vector<CatalogEntry>& identity_catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"ybe", "rmatrix", "(u-v)(u-v-\\kappa)u(u-\\kappa)v(v-\\kappa)",
         "R_{12}(u-v)R_{13}(u)R_{23}(v)=R_{23}(v)R_{13}(u)R_{12}(u-v)"},
        {"rmatrix-structure", "rmatrix", "-",
         "R(u)=1-\\frac{P}{u}+\\frac{Q}{u-\\kappa},\\ P^2=1,\\ Q^2=NQ,\\ PQ=QP=Q,\\ Q=P^{t}"},
        {"rtt", "rtt", "(u-v)(u-v-1/2)", "R(u-v)T_1(u)T_2(v)=T_2(v)T_1(u)R(u-v)"},
        {"t-generating-relation", "rtt", "(u-v)(u-v-1/2)",
         "[t_{ij}(u),t_{kl}(v)]=\\frac{1}{u-v}(t_{kj}(u)t_{il}(v)-t_{kj}(v)t_{il}(u))"
         "-\\frac{1}{u-v-\\frac{1}{2}}(\\delta_{k,-i}\\sum_{p}t_{pj}(u)t_{-p,l}(v)"
         "-\\delta_{l,-j}\\sum_{p}t_{k,-p}(v)t_{ip}(u))"},
        {"rtt-inverse-form", "rtt", "(u-v)(u-v-1/2)",
         "T^{-1}_2(v)R(u-v)T_1(u)=T_1(u)R(u-v)T^{-1}_2(v)"},
        {"tprime-generating-relation", "rtt", "(u-v)(u-v-1/2)",
         "[t_{pq}(u),t'_{rs}(v)]=\\frac{1}{u-v-\\frac{1}{2}}(t'_{r,-p}(v)t_{-s,q}(u)"
         "-t_{p,-r}(u)t'_{-q,s}(v))+\\frac{1}{u-v}(\\delta_{qr}\\sum_{i}t_{pi}(u)t'_{is}(v)"
         "-\\delta_{ps}\\sum_{i}t'_{ri}(v)t_{iq}(u))"},
        {"unitarity", "unitarity", "-", "T(u)T^t(u+\\kappa)=T^t(u+\\kappa)T(u)=1"},
        {"gauss-decomposition", "gauss", "-",
         "T(u)=F(u)K(u)E(u) uniquely, with unitriangular F(u), E(u), diagonal K(u), "
         "k_{i}(u)=1+\\sum^{\\infty}_{r=1}k^{(r)}_{i}u^{-r}"},
        {"k1-inverse-shift", "section3", "-", "k_{1}^{-1}(u)=k_{-1}(u+\\frac{1}{2})"},
        {"e01-k1-unitarity", "section3", "-",
         "-e_{01}(u)k_{1}^{-1}(u)=k_{-1}(u+\\frac{1}{2})e_{-1,0}(u+\\frac{1}{2})"},
        {"f10-k1-unitarity", "section3", "-",
         "-k_{1}^{-1}(u)f_{10}(u)=f_{0,-1}(u+\\frac{1}{2})k_{-1}(u+\\frac{1}{2})"},
        {"k0-inverse-cross", "section3", "-",
         "k_{0}^{-1}(u)+e_{01}(u)k_{1}^{-1}(u)f_{10}(u)=k_{0}(u+\\frac{1}{2})"
         "+f_{0,-1}(u+\\frac{1}{2})k_{-1}(u+\\frac{1}{2})e_{-1,0}(u+\\frac{1}{2})"},
        {"k-family-relations", "section3", "(u-v)",
         "[k_{-1}(u),k_{-1}(v)]=0,\\ [k_{-1}(u),k_0(v)]=0,\\ "
         "[k_{-1}(u),e_{-1,0}(v)]=\\frac{k_{-1}(u)(e_{-1,0}(v)-e_{-1,0}(u))}{u-v},\\ "
         "[k_{-1}(u),f_{0,-1}(v)]=\\frac{(f_{0,-1}(u)-f_{0,-1}(v))k_{-1}(u)}{u-v}"},
        {"ef-commutator", "section3", "(u-v)",
         "[e_{-1,0}(u),f_{0,-1}(v)]=\\frac{k_{-1}^{-1}(u)k_{0}(u)-k_{-1}^{-1}(v)k_{0}(v)}{u-v}"},
        {"ef-reflection", "section3", "-",
         "e_{01}(u)=-e_{-1,0}(u-\\frac{1}{2}),\\ f_{10}(u)=-f_{0,-1}(u-\\frac{1}{2})"},
        {"k0-factorization", "section3", "-", "k_0(u)=k_{-1}(u)k^{-1}_{-1}(u+\\frac{1}{2})"},
        {"h-anticommutators", "section3", "2(u-v)",
         "[k^{-1}_{-1}(u)k_{0}(u),e_{-1,0}(v)]=\\frac{1}{2}\\frac{1}{u-v}"
         "\\{k^{-1}_{-1}(u)k_{0}(u),e_{-1,0}(u)-e_{-1,0}(v)\\},\\ "
         "[k^{-1}_{-1}(u)k_{0}(u),f_{0,-1}(v)]=-\\frac{1}{2}\\frac{1}{u-v}"
         "\\{k^{-1}_{-1}(u)k_{0}(u),f_{0,-1}(u)-f_{0,-1}(v)\\}"},
        {"ee-ff-quadratic", "section3", "2(u-v)",
         "[e_{-1,0}(u),e_{-1,0}(v)]=\\frac{1}{2}\\frac{(e_{-1,0}(u)-e_{-1,0}(v))^2}{u-v},\\ "
         "[f_{0,-1}(u),f_{0,-1}(v)]=-\\frac{1}{2}\\frac{(f_{0,-1}(u)-f_{0,-1}(v))^2}{u-v}"},
        {"em11-shift-combination", "section3", "-",
         "3e_{-1,1}(u+\\frac{1}{2})-e_{-1,1}(u)+3e_{-1,0}(u+\\frac{1}{2})e_{-1,0}(u)"
         "-2e^{2}_{-1,0}(u)=0"},
        {"em11-from-first-mode", "section3", "-",
         "e_{-1,1}(u)=[e^{(1)}_{-1,0},e_{-1,0}(u)]-e^{2}_{-1,0}(u)"},
        {"first-mode-shift-identity", "section3", "-",
         "[e^{(1)}_{-1,0},e_{-1,0}(u)]=e^{2}_{-1,0}(u)-e_{-1,0}(u+\\frac{1}{2})e_{-1,0}(u)"
         "-e_{-1,1}(u+\\frac{1}{2})"},
        {"em11-half-square", "section3", "-", "e_{-1,1}(u)=-\\frac{1}{2}e^{2}_{-1,0}(u)"},
        {"f1m1-half-square", "section3", "-",
         "f_{1,-1}(u)=-\\frac{1}{2}f^{2}_{0,-1}(u)=-\\frac{1}{2}f^{2}_{1,0}(u+\\frac{1}{2})"},
        {"drinfeld-current-relations", "drinfeld", "2(u-v)",
         "[H(u),H(v)]=0,\\ [X^{+}(u),X^{-}(v)]=-\\frac{H(u)-H(v)}{u-v},\\ "
         "[H(u),X^{\\pm}(v)]=\\mp\\frac{1}{2}\\frac{\\{H(u),X^{\\pm}(u)-X^{\\pm}(v)\\}}{u-v},\\ "
         "[X^{\\pm}(u),X^{\\pm}(v)]=\\mp\\frac{1}{2}\\frac{(X^{\\pm}(u)-X^{\\pm}(v))^2}{u-v}"},
        {"drinfeld-mode-relations", "drinfeld", "-",
         "[h_k,h_l]=0, [x^+_k,x^-_l]=h_{k+l}, [h_0,x^{\\pm}_l]=\\pm x^{\\pm}_{l}, "
         "[h_{k+1},x^{\\pm}_l]-[h_k,x^{\\pm}_{l+1}]=\\pm \\frac{1}{2}\\{h_k,x^{\\pm}_{l}\\}, "
         "[x^{\\pm}_{k+1},x^{\\pm}_l]-[x^{\\pm}_k,x^{\\pm}_{l+1}]=\\pm \\frac{1}{2}"
         "\\{x^{\\pm}_k,x^{\\pm}_{l}\\}"},
        {"realization-roundtrip", "roundtrip", "-",
         "X^{-}(u)\\mapsto e_{-1,0}(u), X^{+}(u)\\mapsto f_{0,-1}(u), "
         "H(u)\\mapsto k_{-1}^{-1}(u)k_{0}(u); k_{-1}(u)\\mapsto H^{-1}(u-\\frac{1}{2}); "
         "T(u) regenerates from k_{-1}(u), e_{-1,0}(u), f_{0,-1}(u) alone"},
    };
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : identity_catalog())
        if (id == e.id) return e;
    throw std::invalid_argument("catalog_entry: unknown id '" + id + "'");
}

std::string catalog_listing() {
    std::ostringstream os;
    for (const auto& e : identity_catalog())
        os << e.id << " | " << e.clearing << " | " << e.statement << "\n";
    return os.str();
}

} // namespace yso3
