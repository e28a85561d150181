//! Coverage map from named results of the theory to the laws that check
//! them, or to a reason they are not checked by the registry.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "coverage", content = "detail")]
pub enum Coverage {
    Laws(&'static [&'static str]),
    OutOfScope(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub statement: &'static str,
    #[serde(flatten)]
    pub coverage: Coverage,
}

const fn laws(statement: &'static str, ids: &'static [&'static str]) -> Entry {
    Entry {
        statement,
        coverage: Coverage::Laws(ids),
    }
}

const fn out(statement: &'static str, reason: &'static str) -> Entry {
    Entry {
        statement,
        coverage: Coverage::OutOfScope(reason),
    }
}

pub const MANIFEST: &[Entry] = &[
    laws("lattice of relations of each type", &[
        "lattice.order", "lattice.bounds", "lattice.join", "lattice.meet", "lattice.distributive", "lattice.complement",
    ]),
    laws("composition is associative with identities and bottom as zero", &[
        "compose.assoc", "compose.unit", "compose.zero", "compose.monotone", "compose.distributes.union",
    ]),
    laws("converse is a poset isomorphism and reverses composition", &[
        "converse.involution", "converse.compose", "converse.monotone", "converse.lattice",
    ]),
    laws("modularity rule", &["modular.left", "modular.check", "modular.identity"]),
    laws("modularity rule, converse-dual form", &["modular.right", "modular.check"]),
    laws("cone rule", &["cone.rule", "cone.pairs"]),
    out("reflexive-transitive closure from completeness", "closure operators are not part of the toolkit"),
    laws("left factor Galois connection", &["factor.left.galois", "factor.composition"]),
    laws("right factor Galois connection", &["factor.right.galois", "factor.converse"]),
    laws("factor cancellation", &["factor.cancel"]),
    laws("R\\R and R/R are transitive", &["factor.preorders"]),
    laws("R\\R and R/R are reflexive", &["factor.preorders"]),
    laws("self-factor cancellation", &["factor.self.cancel"]),
    laws("domain operators, definition", &["domain.formula", "coreflexive.idempotent", "coreflexive.meet", "coreflexive.restrict"]),
    laws("right domain is least", &["domains.least", "rdom.galois"]),
    laws("left domain is least", &["domains.least", "ldom.galois"]),
    laws("domains as units of composition", &["domains.unit"]),
    laws("domains vanish exactly on bottom", &["domains.bottom"]),
    laws("domain absorption and Galois properties for coreflexives", &[
        "rdom.absorb", "ldom.absorb", "rdom.galois", "ldom.galois", "domains.top",
    ]),
    laws("domains of converse and composition", &["domains.converse", "domains.compose", "domains.monotone"]),
    laws("symmetric division, definitions", &["symdiv.equivalence", "symdiv.converse"]),
    laws("symmetric division cancellation", &["symdiv.cancel"]),
    laws("right and left per domains, definition", &["perdom.formula", "perdom.are.pers", "perdom.converse"]),
    laws("per domains as units of composition", &["perdom.unit"]),
    laws("per domains are least", &["perdom.least.right", "perdom.least.left"]),
    laws("per domain, alternative formula", &["perdom.formula"]),
    laws("domains of per domains", &["perdom.domains"]),
    laws("partial equivalence relation, definition", &["per.characterisations", "perdom.of.per"]),
    laws("equivalent characterisations of pers", &["per.characterisations"]),
    laws("functionality conventions", &["functional.def", "functional.compose", "bijection.converse"]),
    laws("difunctionality, definition", &["difunctional.characterisations", "difunctional.converse"]),
    laws("equivalent characterisations of difunctionality", &[
        "difunctional.characterisations", "difunctional.perdoms", "difunctional.factors",
    ]),
    laws("pers are symmetric difunctions", &["per.is.difunctional"]),
    laws("rectangle and square, definition", &["rectangle.domains", "rectangle.is.difunctional"]),
    laws("R∘⊤∘S is a rectangle", &["rectangle.through.top", "rectangle.compose"]),
    laws("isomorphic relations, definition", &["iso.reflexive", "iso.symmetric"]),
    laws("isomorphism witness in both directions", &["iso.exchange"]),
    laws("exchange of witness equations", &["iso.exchange"]),
    laws("isomorphism is an equivalence", &["iso.reflexive", "iso.symmetric", "iso.transitive"]),
    laws("isomorphism preserves domains", &["iso.preserves.domains"]),
    laws("isomorphism preserves per domains", &["iso.preserves.domains"]),
    laws("isomorphic to a coreflexive iff a bijection", &["iso.bijection.coreflexive", "iso.coreflexives"]),
    laws("witness equations for a coreflexive isomorphic to R", &["iso.bijection.coreflexive"]),
    laws("per isomorphic to its domain equals it", &["iso.coreflexive.per"]),
    laws("core relation, definition", &["core.relation.def"]),
    laws("index, definition", &["index.exists", "index.of.itself"]),
    laws("a core relation is its own index", &["core.relation.own.index"]),
    laws("indexes have smaller per domains and are core relations", &["index.perdom.below", "index.is.core.relation"]),
    laws("an index is an index of itself", &["index.of.itself"]),
    laws("index is determined by R and its domains", &["index.restricts"]),
    laws("indexes with equal domains are equal", &["index.determined.by.domains"]),
    laws("R∘J°∘R = R∘R°∘R", &["index.difunctional.closure"]),
    laws("per domains recovered through an index are pers", &["index.perdom.recovered"]),
    laws("domains of the recovered per domains", &["index.perdom.recovered", "core.theorem"]),
    laws("per domains recovered through an index", &["index.perdom.recovered"]),
    laws("domains of an index index the per domains", &["index.domains.index.perdoms"]),
    laws("indexes of isomorphic relations are isomorphic", &["index.iso.invariant", "index.unique.up.to.iso"]),
    laws("core, definition", &["core.witnesses", "core.modes.isomorphic"]),
    laws("every index is a core", &["core.from.index"]),
    laws("domains of a core", &["core.theorem"]),
    laws("cores are isomorphic to indexes", &["core.theorem"]),
    laws("per domains of a core are its domains", &["core.theorem"]),
    laws("difunctional index forces a difunction", &["index.bijection.iff.difunctional"]),
    laws("difunction index, definition", &["difun.index.conditions", "difun.index.facts"]),
    laws("an index of a difunction is a bijection", &["difun.index.facts", "index.bijection.iff.difunctional"]),
    laws("R is a difunction iff its index is", &["index.bijection.iff.difunctional"]),
    laws("a per with an index has a coreflexive index", &["per.coreflexive.index"]),
    laws("coreflexive index conditions for a per", &["per.index.conditions"]),
    laws("index of a per, definition", &["per.index.conditions", "choice.per"]),
    laws("axiom of choice", &["choice.per", "per.coreflexive.index"]),
    laws("indexes from per-domain indexes", &["index.from.perdom.indexes", "index.exists"]),
    laws("characteristic property of pers", &["splitting.per", "functional.split.per"]),
    laws("splitting of a per", &["splitting.per", "splitting.unique"]),
    laws("characteristic property of difunctions", &["difun.split", "functional.split.difunctional"]),
    out("unicity of characterisations in arbitrary categories", "stated for abstract allegories; only concrete splittings are compared"),
    laws("atom and atomicity, definition", &["atom.iff.single", "atoms.saturate"]),
    laws("saturated lattice, definition", &["points.saturate", "atoms.saturate"]),
    laws("saturated distributive lattices are powersets", &["points.count", "relations.count"]),
    laws("point, definition", &["points.count", "point.iff.particle"]),
    laws("distinct points are disjoint", &["points.disjoint"]),
    laws("coreflexives are saturated by points", &["points.saturate"]),
    laws("extensionality", &["points.saturate", "points.count"]),
    laws("pair, definition", &["pair.iff.proper.atom", "pair.from.points"]),
    laws("a pair is an atom", &["pair.iff.proper.atom", "pair.atom.lattice"]),
    laws("particles are atoms", &["point.iff.particle"]),
    laws("a particle is coreflexive", &["point.iff.particle"]),
    laws("particle, definition", &["point.iff.particle", "point.particle.lattice"]),
    laws("particles are points", &["point.iff.particle", "point.particle.lattice"]),
    laws("points are particles", &["point.iff.particle", "point.particle.lattice"]),
    laws("points and particles coincide", &["point.particle.lattice"]),
    laws("domains of a proper atom are proper atoms", &["pair.domains"]),
    laws("domains of a proper atom are particles", &["pair.domains"]),
    laws("a proper atom is a rectangle", &["pair.domains", "pair.iff.proper.atom"]),
    laws("proper atoms are pairs", &["pair.iff.proper.atom"]),
    laws("proper atoms and pairs coincide", &["pair.atom.lattice"]),
    laws("domains of a pair are particles", &["pair.domains"]),
    laws("pairs are built from points", &["pair.characterisation", "pair.from.points"]),
    laws("all-or-nothing rule", &["all.or.nothing"]),
    laws("extensional coreflexives make relations saturated", &["saturation", "pointwise.lattice"]),
    laws("saturation by pairs", &["saturation"]),
    laws("irreducibility", &["irreducibility"]),
    laws("saturated relations make coreflexives extensional", &["points.saturate", "saturation"]),
    laws("extensionality of relations and of coreflexives coincide", &["saturation", "points.saturate"]),
    laws("pointwise composition and converse", &["pointwise.compose", "pointwise.converse"]),
];

/// Law ids referenced by the manifest that are not registered.
pub fn dangling(registered: &[&str]) -> Vec<&'static str> {
    MANIFEST
        .iter()
        .filter_map(|e| match e.coverage {
            Coverage::Laws(ids) => Some(ids),
            Coverage::OutOfScope(_) => None,
        })
        .flatten()
        .copied()
        .filter(|id| !registered.contains(id))
        .collect()
}

/// Registered law ids that no manifest entry mentions.
pub fn unmapped<'a>(registered: &[&'a str]) -> Vec<&'a str> {
    registered
        .iter()
        .copied()
        .filter(|id| {
            !MANIFEST
                .iter()
                .any(|e| matches!(e.coverage, Coverage::Laws(ids) if ids.contains(id)))
        })
        .collect()
}
