"""Diagram model: node-link view of an ontology plus the element-to-axiom map.

Every non-declaration axiom is attached to at least one diagram element (the
coverage invariant); the collector walks that map to answer "which axioms does
this element stand for" in three widening scopes.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Sequence

from . import manchester
from .model import (
    AllValuesFrom,
    Axiom,
    ClassAssertion,
    DataPropertyAssertion,
    DataPropertyDomain,
    DataPropertyRange,
    Declaration,
    DisjointClasses,
    DisjointObjectProperties,
    EntityKind,
    EntityRef,
    EquivalentClasses,
    EquivalentObjectProperties,
    ExactCardinality,
    InverseObjectProperties,
    MaxCardinality,
    MinCardinality,
    Named,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    Ontology,
    OntologyError,
    SubClassOf,
    SubObjectPropertyOf,
    THING_REF,
    UnionOf,
    axioms_referencing,
    mentioned_entities,
)
from .reasoner import InferredAxiom
from .verbalizer import axiom_sort_key

CHAR_WIDTH = 8.0
LINE_HEIGHT = 20.0
H_GAP = 40.0
V_GAP = 60.0
FORK_SIZE = 12.0

_CARDINALITIES = (MinCardinality, MaxCardinality, ExactCardinality)


class ElementNotFoundError(OntologyError):
    pass


@dataclass(frozen=True)
class DiagramElement:
    id: str
    kind: str
    owner: Optional[str] = None
    labels: Mapping[str, str] = field(default_factory=dict)
    source: Optional[str] = None
    target: Optional[str] = None
    x: float = 0.0
    y: float = 0.0
    w: float = 0.0
    h: float = 0.0


@dataclass(frozen=True)
class DiagramModel:
    elements: tuple[DiagramElement, ...]
    element_axioms: Mapping[str, tuple[str, ...]]
    represents: Mapping[str, tuple[EntityRef, ...]]

    def element(self, element_id: str) -> DiagramElement:
        for e in self.elements:
            if e.id == element_id:
                return e
        raise ElementNotFoundError(f"no diagram element {element_id!r}")

    def has_element(self, element_id: str) -> bool:
        return any(e.id == element_id for e in self.elements)


def diagram_to_dict(d: DiagramModel) -> dict:
    """The wire form consumed by the frontend."""
    return {
        "elements": [
            {
                "id": e.id,
                "kind": e.kind,
                "owner": e.owner,
                "labels": dict(e.labels),
                "x": e.x,
                "y": e.y,
                "w": e.w,
                "h": e.h,
                "source": e.source,
                "target": e.target,
            }
            for e in d.elements
        ],
        "element_axioms": {k: list(v) for k, v in d.element_axioms.items()},
    }


# --- builder -------------------------------------------------------------------


class _Builder:
    def __init__(self, o: Ontology):
        self.o = o
        self.elements: list[DiagramElement] = []
        self.attached: dict[str, list[str]] = {}
        self.attached_ids: set[str] = set()
        self.represents: dict[str, list[EntityRef]] = {}
        self.ids: set[str] = set()

    def add(self, element: DiagramElement, represents: Sequence[EntityRef] = ()) -> DiagramElement:
        if element.id in self.ids:
            return next(e for e in self.elements if e.id == element.id)
        self.ids.add(element.id)
        self.elements.append(element)
        self.attached[element.id] = []
        self.represents[element.id] = list(represents)
        return element

    def attach(self, element_id: str, axiom: Axiom) -> None:
        if axiom.id not in self.attached[element_id]:
            self.attached[element_id].append(axiom.id)
            self.attached_ids.add(axiom.id)

    def class_node(self, ref: EntityRef) -> str:
        node_id = f"class:{ref.name}"
        self.add(DiagramElement(node_id, "class-node", labels={"name": ref.name}), [ref])
        return node_id

    def thing_node(self) -> str:
        return self.class_node(THING_REF)

    def individual_node(self, ref: EntityRef) -> str:
        node_id = f"ind:{ref.name}"
        self.add(DiagramElement(node_id, "individual-node", labels={"name": ref.name}), [ref])
        return node_id

    def expression_field(self, owner_node: str, axiom: Axiom, text: str, represents: Sequence[EntityRef]) -> None:
        owner_name = owner_node.split(":", 1)[1]
        index = sum(1 for e in self.elements if e.kind == "expression-field" and e.owner == owner_node)
        field_id = f"field:{owner_name}:{index}"
        self.add(
            DiagramElement(field_id, "expression-field", owner=owner_node, labels={"text": text}),
            represents,
        )
        self.attach(field_id, axiom)


def build_diagram(o: Ontology, class_assertion_style: str = "edge") -> DiagramModel:
    """Map the ontology onto diagram elements. `class_assertion_style` picks
    the rendering of named class assertions: an instance-of edge ("edge",
    the default) or a class label inside the individual's box ("label")."""
    if class_assertion_style not in ("edge", "label"):
        raise ValueError(f"unknown class assertion style {class_assertion_style!r}")
    b = _Builder(o)

    for ref in o.declared(EntityKind.CLASS):
        b.class_node(ref)
    for ref in o.declared(EntityKind.INDIVIDUAL):
        b.individual_node(ref)

    classes = {r.name for r in o.declared(EntityKind.CLASS)} | {THING_REF.name}
    obj_props = list(o.declared(EntityKind.OBJECT_PROPERTY))
    data_props = list(o.declared(EntityKind.DATA_PROPERTY))

    # group object properties that are declared inverse of each other: the
    # pair shares one association edge with two role labels
    partner: dict[EntityRef, EntityRef] = {}
    for a in o.axioms:
        c = a.content
        if isinstance(c, InverseObjectProperties) and c.first != c.second:
            if c.first not in partner and c.second not in partner:
                partner[c.first] = c.second
                partner[c.second] = c.first

    def property_axioms(prop: EntityRef) -> list[Axiom]:
        kinds = (
            ObjectPropertyDomain,
            ObjectPropertyRange,
            InverseObjectProperties,
            DisjointObjectProperties,
            SubObjectPropertyOf,
            EquivalentObjectProperties,
        )
        out = []
        for a in o.axioms:
            c = a.content
            if isinstance(c, kinds) and prop in mentioned_entities(c):
                out.append(a)
            elif (
                isinstance(c, SubClassOf)
                and isinstance(c.sub, Named)
                and isinstance(c.sup, _CARDINALITIES)
                and c.sup.prop.base == prop
            ):
                out.append(a)
        return out

    def named_endpoint(prop: EntityRef, want_domain: bool) -> Optional[str]:
        for a in o.axioms:
            c = a.content
            if want_domain and isinstance(c, ObjectPropertyDomain) and c.prop.base == prop and not c.prop.inverted:
                if isinstance(c.domain, Named):
                    return c.domain.entity.name
            if not want_domain and isinstance(c, ObjectPropertyRange) and c.prop.base == prop and not c.prop.inverted:
                if isinstance(c.range, Named):
                    return c.range.entity.name
        return None

    def cardinality_label(axioms: list[Axiom]) -> str:
        parts = []
        for a in axioms:
            c = a.content
            if isinstance(c, SubClassOf) and isinstance(c.sup, _CARDINALITIES):
                word = {MinCardinality: "min", MaxCardinality: "max", ExactCardinality: "exactly"}[type(c.sup)]
                parts.append(f"{word} {c.sup.n}")
        return ", ".join(parts)

    edge_of_property: dict[EntityRef, str] = {}
    done: set[EntityRef] = set()
    for prop in obj_props:
        if prop in done:
            continue
        group = [prop]
        other = partner.get(prop)
        if other is not None and other not in done:
            group.append(other)
        done.update(group)
        group_axioms: list[Axiom] = []
        for member in group:
            for a in property_axioms(member):
                if a not in group_axioms:
                    group_axioms.append(a)
        if not group_axioms:
            continue  # the property only occurs inside expressions; no edge
        leader = group[0]
        source_name = named_endpoint(leader, True)
        target_name = named_endpoint(leader, False)
        if len(group) > 1:
            source_name = source_name or named_endpoint(group[1], False)
            target_name = target_name or named_endpoint(group[1], True)
        source = b.class_node(o.entity(source_name)) if source_name in classes else b.thing_node()
        target = b.class_node(o.entity(target_name)) if target_name in classes else b.thing_node()
        labels = {"role": leader.name}
        if len(group) > 1:
            labels["inverse_role"] = group[1].name
        card = cardinality_label(group_axioms)
        if card:
            labels["cardinality"] = card
        edge_id = f"edge:{leader.name}"
        b.add(
            DiagramElement(edge_id, "association-edge", labels=labels, source=source, target=target),
            group,
        )
        for member in group:
            edge_of_property[member] = edge_id
        for a in group_axioms:
            b.attach(edge_id, a)

    # data properties: attribute lines inside their domain class boxes
    attr_of_data_prop: dict[EntityRef, list[str]] = {}
    for prop in data_props:
        domains = [
            a for a in o.axioms
            if isinstance(a.content, DataPropertyDomain) and a.content.prop == prop
        ]
        ranges = [
            a for a in o.axioms
            if isinstance(a.content, DataPropertyRange) and a.content.prop == prop
        ]
        range_text = ranges[0].content.datatype.name if ranges else "Literal"
        owners: list[tuple[str, list[Axiom]]] = []
        for a in domains:
            if isinstance(a.content.domain, Named):
                owners.append((b.class_node(a.content.domain.entity), [a]))
        if not owners and (domains or ranges):
            owners.append((b.thing_node(), [a for a in domains]))
        attr_of_data_prop[prop] = []
        for owner, own_axioms in owners:
            attr_id = f"attr:{owner.split(':', 1)[1]}:{prop.name}"
            b.add(
                DiagramElement(
                    attr_id, "attribute-line", owner=owner,
                    labels={"text": f"{prop.name} : {range_text}", "name": prop.name},
                ),
                [prop],
            )
            attr_of_data_prop[prop].append(attr_id)
            for a in own_axioms + ranges:
                b.attach(attr_id, a)

    # generalizations, forks, restrictions, assertions, expression fields
    gen_edges: dict[tuple[str, str], str] = {}
    subs_of: dict[str, list[tuple[str, Axiom]]] = {}
    for a in o.axioms:
        c = a.content
        if isinstance(c, SubClassOf) and isinstance(c.sub, Named) and isinstance(c.sup, Named):
            sub, sup = c.sub.entity, c.sup.entity
            edge_id = f"gen:{sub.name}:{sup.name}"
            b.add(
                DiagramElement(edge_id, "generalization-edge", source=b.class_node(sub), target=b.class_node(sup)),
                [sub, sup],
            )
            b.attach(edge_id, a)
            gen_edges[(sub.name, sup.name)] = edge_id
            subs_of.setdefault(sup.name, []).append((sub.name, a))

    fork_of_sup: dict[str, str] = {}
    for a in o.axioms:
        c = a.content
        if not (isinstance(c, DisjointClasses) and len(c.operands) >= 2):
            continue
        if not all(isinstance(op, Named) for op in c.operands):
            continue
        operand_names = {op.entity.name for op in c.operands}
        for sup_name, pairs in subs_of.items():
            sibling_names = {sub for sub, _ in pairs}
            if operand_names == sibling_names and sup_name not in fork_of_sup:
                fork_id = f"fork:{sup_name}"
                sup_ref = o.entity(sup_name)
                members = [sup_ref] + [o.entity(nm) for nm in sorted(sibling_names)]
                b.add(DiagramElement(fork_id, "fork-node", labels={"constraint": "disjoint"}), members)
                b.attach(fork_id, a)
                for sub_name, gen_axiom in pairs:
                    b.attach(fork_id, gen_axiom)
                    edge_id = gen_edges[(sub_name, sup_name)]
                    idx = next(i for i, e in enumerate(b.elements) if e.id == edge_id)
                    b.elements[idx] = replace(b.elements[idx], target=fork_id)
                b.add(
                    DiagramElement(f"gen:{fork_id}", "generalization-edge", source=fork_id, target=f"class:{sup_name}"),
                    [sup_ref],
                )
                fork_of_sup[sup_name] = fork_id
                break

    def first_node_for(axiom: Axiom) -> Optional[str]:
        mentioned = mentioned_entities(axiom.content)
        for ref in mentioned:
            if ref.kind == EntityKind.CLASS:
                return b.class_node(ref)
        for ref in mentioned:
            if ref.kind == EntityKind.INDIVIDUAL:
                return b.individual_node(ref)
        return None

    for a in o.axioms:
        c = a.content
        if isinstance(c, Declaration) or a.id in b.attached_ids:
            continue
        if isinstance(c, SubClassOf):
            if (
                isinstance(c.sub, Named)
                and isinstance(c.sup, AllValuesFrom)
                and c.sup.prop.inverted
                and isinstance(c.sup.filler, Named)
            ):
                sub, filler = c.sub.entity, c.sup.filler.entity
                restr_id = f"restr:{sub.name}:{c.sup.prop.base.name}:{filler.name}"
                b.add(
                    DiagramElement(
                        restr_id, "restriction-edge",
                        labels={"property": c.sup.prop.base.name, "text": manchester.render_class_expression(c.sup)},
                        source=b.class_node(sub), target=b.class_node(filler),
                    ),
                    [sub, c.sup.prop.base, filler],
                )
                b.attach(restr_id, a)
                continue
            if isinstance(c.sub, Named):
                text = "< " + manchester.render_class_expression(c.sup)
                b.expression_field(b.class_node(c.sub.entity), a, text, mentioned_entities(c))
                continue
        if isinstance(c, EquivalentClasses):
            named = next((op for op in c.operands if isinstance(op, Named)), None)
            if named is not None:
                rest = [op for op in c.operands if op is not named]
                text = "= " + ", ".join(manchester.render_class_expression(op) for op in rest)
                b.expression_field(b.class_node(named.entity), a, text, mentioned_entities(c))
                continue
        if isinstance(c, DisjointClasses):
            named = next((op for op in c.operands if isinstance(op, Named)), None)
            if named is not None:
                rest = [op for op in c.operands if op is not named]
                text = "<> " + ", ".join(manchester.render_class_expression(op) for op in rest)
                b.expression_field(b.class_node(named.entity), a, text, mentioned_entities(c))
                continue
        if isinstance(c, ClassAssertion):
            node = b.individual_node(c.individual)
            if isinstance(c.expr, Named) and class_assertion_style == "edge":
                inst_id = f"inst:{c.individual.name}:{c.expr.entity.name}"
                b.add(
                    DiagramElement(inst_id, "instanceof-edge", source=node, target=b.class_node(c.expr.entity)),
                    [c.individual, c.expr.entity],
                )
                b.attach(inst_id, a)
            else:
                text = ": " + manchester.render_class_expression(c.expr)
                b.expression_field(node, a, text, mentioned_entities(c))
            continue
        if isinstance(c, ObjectPropertyAssertion):
            link_id = f"link:{c.prop.name}:{c.subject.name}:{c.object.name}"
            b.add(
                DiagramElement(
                    link_id, "association-edge", labels={"role": c.prop.name},
                    source=b.individual_node(c.subject), target=b.individual_node(c.object),
                ),
                [c.prop, c.subject, c.object],
            )
            b.attach(link_id, a)
            continue
        if isinstance(c, DataPropertyAssertion):
            node = b.individual_node(c.subject)
            attr_id = f"attr:{c.subject.name}:{c.prop.name}:{a.id}"
            b.add(
                DiagramElement(
                    attr_id, "attribute-line", owner=node,
                    labels={"text": f"{c.prop.name} = {manchester.render_literal(c.value)}", "name": c.prop.name},
                ),
                [c.prop, c.subject],
            )
            b.attach(attr_id, a)
            continue
        # catch-all: never drop an axiom (coverage invariant)
        node = first_node_for(a)
        if node is not None:
            b.expression_field(node, a, manchester.render_manchester(a), mentioned_entities(c))
            continue
        host = None
        for ref in mentioned_entities(c):
            if ref.kind == EntityKind.OBJECT_PROPERTY and ref in edge_of_property:
                host = edge_of_property[ref]
                break
            if ref.kind == EntityKind.DATA_PROPERTY and attr_of_data_prop.get(ref):
                host = attr_of_data_prop[ref][0]
                break
        if host is None:
            host = b.thing_node()
            b.expression_field(host, a, manchester.render_manchester(a), mentioned_entities(c))
        else:
            b.attach(host, a)

    return DiagramModel(
        tuple(b.elements),
        {eid: tuple(ids) for eid, ids in b.attached.items()},
        {eid: tuple(refs) for eid, refs in b.represents.items()},
    )


# --- layout --------------------------------------------------------------------


def layout(d: DiagramModel) -> DiagramModel:
    """Deterministic layered placement: the generalization hierarchy defines
    the vertical layers (superclasses above), barycenter passes order each
    layer, and no two boxes overlap."""
    by_id = {e.id: e for e in d.elements}
    boxes = [e for e in d.elements if e.kind in ("class-node", "individual-node")]
    forks = [e for e in d.elements if e.kind == "fork-node"]
    owned: dict[str, list[DiagramElement]] = {}
    for e in d.elements:
        if e.owner is not None:
            owned.setdefault(e.owner, []).append(e)

    def box_size(e: DiagramElement) -> tuple[float, float]:
        lines = [e.labels.get("name", e.id)]
        lines += [child.labels.get("text", "") for child in owned.get(e.id, [])]
        width = max(40.0, CHAR_WIDTH * max(len(t) for t in lines) + CHAR_WIDTH)
        return width, LINE_HEIGHT * len(lines) + LINE_HEIGHT / 2

    # superclass layers via the generalization edges (forks are transparent)
    sup_of: dict[str, list[str]] = {}
    fork_sup: dict[str, str] = {}
    for e in d.elements:
        if e.kind == "generalization-edge" and e.source in by_id and by_id[e.source].kind == "fork-node":
            fork_sup[e.source] = e.target
    for e in d.elements:
        if e.kind != "generalization-edge" or e.source is None or e.target is None:
            continue
        if e.source in fork_sup:
            continue
        target = fork_sup.get(e.target, e.target)
        if by_id.get(e.source) is not None and by_id[e.source].kind == "class-node":
            sup_of.setdefault(e.source, []).append(target)

    layer_cache: dict[str, int] = {}

    def class_layer(node_id: str, trail: frozenset[str] = frozenset()) -> int:
        if node_id in layer_cache:
            return layer_cache[node_id]
        if node_id in trail:
            return 0
        sups = sup_of.get(node_id, [])
        value = 0 if not sups else 1 + max(class_layer(s, trail | {node_id}) for s in sups)
        layer_cache[node_id] = value
        return value

    class_nodes = [e for e in boxes if e.kind == "class-node"]
    individual_nodes = [e for e in boxes if e.kind == "individual-node"]
    max_class_layer = max((class_layer(e.id) for e in class_nodes), default=-1)
    layers: dict[int, list[DiagramElement]] = {}
    for e in class_nodes:
        layers.setdefault(class_layer(e.id), []).append(e)
    if individual_nodes:
        layers.setdefault(max_class_layer + 1, []).extend(individual_nodes)

    # neighbor sets for barycenter ordering
    neighbors: dict[str, set[str]] = {}
    for e in d.elements:
        if e.source is None or e.target is None:
            continue
        src = fork_sup.get(e.source, e.source)
        dst = fork_sup.get(e.target, e.target)
        if src in by_id and dst in by_id and src != dst:
            neighbors.setdefault(src, set()).add(dst)
            neighbors.setdefault(dst, set()).add(src)

    order: dict[int, list[DiagramElement]] = {
        idx: sorted(nodes, key=lambda e: e.labels.get("name", e.id)) for idx, nodes in layers.items()
    }
    positions: dict[str, tuple[float, float]] = {}
    sizes = {e.id: box_size(e) for e in boxes}

    def place_layers() -> dict[int, tuple[float, float]]:
        bands: dict[int, tuple[float, float]] = {}
        y = 0.0
        for idx in sorted(order):
            nodes = order[idx]
            total = sum(sizes[e.id][0] for e in nodes) + H_GAP * (len(nodes) - 1)
            x = -total / 2
            height = max(sizes[e.id][1] for e in nodes)
            for e in nodes:
                positions[e.id] = (x, y)
                x += sizes[e.id][0] + H_GAP
            bands[idx] = (y, height)
            y += height + V_GAP
        return bands

    bands = place_layers()
    for _ in range(2):  # barycenter refinement, stable and deterministic
        for idx in sorted(order):
            def barycenter(e: DiagramElement) -> float:
                near = [positions[n][0] + sizes[n][0] / 2 for n in neighbors.get(e.id, ()) if n in positions]
                if not near:
                    return positions[e.id][0] + sizes[e.id][0] / 2
                return sum(near) / len(near)

            order[idx] = sorted(order[idx], key=lambda e: (barycenter(e), e.labels.get("name", e.id)))
        bands = place_layers()

    # vertical centering so a lone node sits at the origin
    if positions:
        top = min(y for _, y in positions.values())
        bottom = max(positions[e.id][1] + sizes[e.id][1] for e in boxes)
        shift = -(top + bottom) / 2
    else:
        shift = 0.0

    placed: dict[str, DiagramElement] = {}
    for e in boxes:
        x, y = positions[e.id]
        w, h = sizes[e.id]
        placed[e.id] = replace(e, x=x, y=y + shift, w=w, h=h)

    # forks live in the gap below their superclass's layer band
    for e in sorted(forks, key=lambda f: f.id):
        sup_id = next((g.target for g in d.elements if g.kind == "generalization-edge" and g.source == e.id), None)
        sub_centers = [
            positions[g.source][0] + sizes[g.source][0] / 2
            for g in d.elements
            if g.kind == "generalization-edge" and g.target == e.id and g.source in positions
        ]
        x = (sum(sub_centers) / len(sub_centers) - FORK_SIZE / 2) if sub_centers else 0.0
        sup_layer = next(
            (idx for idx, nodes in order.items() if any(n.id == sup_id for n in nodes)), None
        )
        if sup_layer is not None:
            band_top, band_height = bands[sup_layer]
            y = band_top + band_height + V_GAP / 2 - FORK_SIZE / 2 + shift
        else:
            y = shift
        candidate = replace(e, x=x, y=y, w=FORK_SIZE, h=FORK_SIZE)
        while any(_overlaps(candidate, other) for other in placed.values()):
            candidate = replace(candidate, x=candidate.x + 10.0)
        placed[e.id] = candidate

    out: list[DiagramElement] = []
    for e in d.elements:
        if e.id in placed:
            out.append(placed[e.id])
        elif e.owner is not None and e.owner in placed:
            owner_box = placed[e.owner]
            index = owned[e.owner].index(e)
            out.append(
                replace(
                    e,
                    x=owner_box.x,
                    y=owner_box.y + LINE_HEIGHT * (index + 1),
                    w=owner_box.w,
                    h=LINE_HEIGHT,
                )
            )
        elif e.source is not None and e.source in placed and e.target in placed:
            sx = placed[e.source].x + placed[e.source].w / 2
            sy = placed[e.source].y + placed[e.source].h / 2
            tx = placed[e.target].x + placed[e.target].w / 2
            ty = placed[e.target].y + placed[e.target].h / 2
            out.append(replace(e, x=(sx + tx) / 2, y=(sy + ty) / 2))
        else:
            out.append(e)
    return DiagramModel(tuple(out), d.element_axioms, d.represents)


def _overlaps(a: DiagramElement, b: DiagramElement) -> bool:
    return not (a.x + a.w <= b.x or b.x + b.w <= a.x or a.y + a.h <= b.y or b.y + b.h <= a.y)


# --- collector -----------------------------------------------------------------


def collect(
    d: DiagramModel,
    o: Ontology,
    inferred: Sequence[InferredAxiom],
    element_id: str,
    scope: str = "direct",
) -> list[tuple[Axiom, bool]]:
    """The axioms a diagram element stands for, in presentation order.

    direct       exactly the axioms the element represents
    referencing  plus every axiom mentioning one of the element's entities
    inferred     plus derived axioms mentioning those entities, flagged
    """
    if scope not in ("direct", "referencing", "inferred"):
        raise ValueError(f"unknown scope {scope!r}")
    if not d.has_element(element_id):
        raise ElementNotFoundError(f"no diagram element {element_id!r}")
    ids = list(d.element_axioms.get(element_id, ()))
    result: list[tuple[Axiom, bool]] = [(o.axiom(i), False) for i in ids]
    if scope in ("referencing", "inferred"):
        entities = [r for r in d.represents.get(element_id, ()) if r in o.declarations]
        for ref in entities:
            for a in axioms_referencing(o, ref):
                if a.id not in ids:
                    ids.append(a.id)
                    result.append((a, False))
        if scope == "inferred":
            for inf in inferred:
                if any(ref in mentioned_entities(inf.axiom.content) for ref in entities):
                    if inf.axiom.id not in ids:
                        ids.append(inf.axiom.id)
                        result.append((inf.axiom, True))
    result.sort(key=lambda pair: axiom_sort_key(pair[0]))
    return result
