#include "foxcalc/freiheit.hpp"

#include <sstream>
#include <stdexcept>

#include "foxcalc/catalog.hpp"
#include "foxcalc/fox.hpp"

namespace foxcalc {

bool magnus_syntactic(const FreeWord& r, int n) {
  if (r.is_identity()) throw std::domain_error("relator must not be the identity");
  if (n < 1 || n > r.rank())
    throw std::invalid_argument("generator index out of range");
  return occurs(cyclic_reduce(r).second, n);
}

Certificate certify(const FreeWord& r, int n, int catalog_limit) {
  bool syntactic = magnus_syntactic(r, n);   // validates r and n
  Certificate cert(n, r);
  RingElt deriv = fox_derive(n, r);

  if (!syntactic) {
    auto [w, c] = cyclic_reduce(r);
    // r = w*c*w^-1 with D_n(c) = 0, so the product rule collapses to
    // D_n(r) = D_n(w)*(c-1)*w^-1, an explicit element of Z[F](R-1)
    RingElt c_minus_one = RingElt::from_word(c);
    c_minus_one.add_term(FreeWord(r.rank()), Int(-1));
    RingElt claimed =
        mul(mul(fox_derive(n, w), c_minus_one), RingElt::from_word(inverse(w)));
    if (!(deriv == claimed))
      throw std::logic_error("conjugation identity failed to verify");
    cert.kind = CertificateKind::ZeroIdentity;
    cert.conjugator = w;
    cert.core = c;
    return cert;
  }

  for (const GroupPtr& g : builtin_catalog()) {
    if (g->order() > catalog_limit) continue;
    for (const GroupHom& psi : all_homs(r.rank(), g)) {
      if (psi.apply(r) != 0) continue;
      QuotRingElt reduced = pi_reduce(deriv, psi, 0);
      if (reduced.is_zero()) continue;
      // re-verify the two defining properties independently of the search
      if (!psi.in_kernel(r) || pi_reduce(deriv, psi, 0).is_zero())
        throw std::logic_error("witness verification failed");
      cert.kind = CertificateKind::NonzeroWitness;
      cert.witness = psi;
      cert.reduced = std::move(reduced);
      return cert;
    }
  }
  return cert;   // Unknown
}

std::string render(const Certificate& cert) {
  std::ostringstream os;
  switch (cert.kind) {
    case CertificateKind::ZeroIdentity:
      os << "ZeroIdentity: relator " << render(cert.relator) << ", generator x"
         << cert.gen << "\n";
      os << "conjugator " << render(*cert.conjugator) << ", core "
         << render(*cert.core) << "\n";
      os << "identity D_" << cert.gen << "(r) = D_" << cert.gen
         << "(w)*(c-1)*w^-1 verified exactly\n";
      break;
    case CertificateKind::NonzeroWitness: {
      const GroupHom& psi = *cert.witness;
      os << "NonzeroWitness: relator " << render(cert.relator)
         << ", generator x" << cert.gen << "\n";
      os << "group " << psi.target()->name() << ", images (";
      for (std::size_t i = 0; i < psi.images().size(); ++i)
        os << (i ? "," : "") << psi.images()[i];
      os << ")\n";
      os << "reduced derivative " << render(*cert.reduced) << "\n";
      break;
    }
    case CertificateKind::Unknown:
      os << "Unknown: relator " << render(cert.relator) << ", generator x"
         << cert.gen << "\n";
      os << "catalog exhausted without a witness\n";
      break;
  }
  return os.str();
}

GildenhuysReport gildenhuys_check(int p, int catalog_limit) {
  if (p != 2 && p != 3)
    throw std::invalid_argument("supported primes are 2 and 3");
  FreeWord x1p(2, {{1, p}});
  FreeWord x2(2, {{2, 1}});
  FreeWord r = x1p * commutator(x2, x1p);
  RingElt deriv = fox_derive(2, r);
  GildenhuysReport rep(r, deriv);
  rep.p = p;
  rep.limit = catalog_limit;

  // closed form -x2^-1 x1^-p x2 x1^p + x1^p
  RingElt expected(2);
  expected.add_term(inverse(x2) * inverse(x1p) * x2 * x1p, Int(-1));
  expected.add_term(x1p, Int(1));
  rep.derivative_matches = deriv == expected;

  for (const GroupPtr& g : builtin_catalog()) {
    if (g->order() > catalog_limit || !g->is_pgroup(p)) continue;
    for (const GroupHom& psi : all_homs(2, g)) {
      ++rep.homs_seen;
      if (psi.apply(r) != 0) continue;
      ++rep.kernel_homs;
      bool power_dies = psi.apply(x1p) == 0;
      bool deriv_dies = pi_reduce(deriv, psi, 0).is_zero();
      if (!power_dies || !deriv_dies) ++rep.assertion_failures;
      if (!rep.witness_found && psi.image_of(1) != 0) {
        rep.witness_found = true;
        rep.witness_group = g->name();
        rep.witness_images = psi.images();
      }
    }
  }
  return rep;
}

std::string render(const GildenhuysReport& rep) {
  std::ostringstream os;
  os << "gildenhuys p=" << rep.p << ", catalog limit " << rep.limit << "\n";
  os << "relator " << render(rep.relator) << "\n";
  os << "D_2 = " << render(rep.derivative) << "\n";
  os << "closed form " << (rep.derivative_matches ? "matches" : "MISMATCH")
     << "\n";
  os << "homs into p-groups " << rep.homs_seen << ", killing the relator "
     << rep.kernel_homs << ", assertion failures " << rep.assertion_failures
     << "\n";
  if (rep.witness_found) {
    os << "x1 survives under images (";
    for (std::size_t i = 0; i < rep.witness_images.size(); ++i)
      os << (i ? "," : "") << rep.witness_images[i];
    os << ") into " << rep.witness_group << "\n";
  } else {
    os << "no hom keeps x1 alive\n";
  }
  return os.str();
}

FreiheitsSweepReport freiheitssatz_equiv_sweep(int rank, int maxlen,
                                               int catalog_limit) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  FreiheitsSweepReport rep;
  rep.rank = rank;
  rep.maxlen = maxlen;
  rep.limit = catalog_limit;
  enumerate_reduced_words(rank, maxlen, [&](const FreeWord& r) {
    if (r.is_identity() || !is_cyclically_reduced(r)) return;
    ++rep.words;
    Certificate cert = certify(r, rank, catalog_limit);
    switch (cert.kind) {
      case CertificateKind::ZeroIdentity: ++rep.zero_identities; break;
      case CertificateKind::NonzeroWitness: ++rep.witnesses; break;
      case CertificateKind::Unknown:
        ++rep.unknowns;
        if (rep.unknown_words.size() < 10)
          rep.unknown_words.push_back(render(r));
        break;
    }
  });
  return rep;
}

std::string render(const FreiheitsSweepReport& rep) {
  std::ostringstream os;
  os << "freiheitssatz sweep: rank " << rep.rank << ", maxlen " << rep.maxlen
     << ", catalog limit " << rep.limit << "\n";
  os << "cyclically reduced relators " << rep.words << "\n";
  os << "zero identities " << rep.zero_identities << ", witnesses "
     << rep.witnesses << ", unknown " << rep.unknowns << "\n";
  for (const std::string& s : rep.unknown_words) os << "unknown: " << s << "\n";
  return os.str();
}

}  // namespace foxcalc
