"""The built-in catalog of verification checks.

Each entry ties a first-order property of the relation to a statement
about the induced operators (an operator law, an inequality evaluated
in the completion, a dual-space condition, or an extremality claim) and
says whether the link is an equivalence or a one-directional
implication.  One-sided statements stay one-sided here; equivalences
are claimed only where they hold under the entry's preconditions.

Checks are evaluated per instance by ``verify_check`` (in ``run``),
which gates on the precondition first: instances failing it are
*skipped*, and the runner treats a check that skips the whole corpus as
a configuration error rather than a pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..duality import RelCondition
from ..order import bits, is_down_directed, is_up_directed, mask_of
from ..subordination import Property as P
from .maximality import verify_prop41

_SUBSET_SCAN_CAP = 8


@dataclass(frozen=True)
class CheckSpec:
    """One verifiable statement.

    ``mode`` is ``iff`` (lhs must equal rhs), ``implies`` (rhs must hold
    whenever lhs does) or ``law`` (a single predicate must hold).
    ``scope`` is ``relation`` (evaluated per instance) or ``carrier``
    (evaluated once per carrier).
    """

    name: str
    doc: str
    mode: str
    precondition: Callable = lambda inst: True
    lhs: Optional[Callable] = None
    rhs: Optional[Callable] = None
    law: Optional[Callable] = None
    scope: str = "relation"


def _flags(*props):
    return lambda inst: all(inst.flag(q) is True for q in props)


def _flag_value(prop):
    return lambda inst: inst.flag(prop) is True


def _needs_lattice(inst) -> bool:
    return inst.lat is not None


def _dia_serial(inst) -> bool:
    return inst.dia_serial


def _box_serial(inst) -> bool:
    return inst.box_serial


def _and(*preds):
    return lambda inst: all(p(inst) for p in preds)


def _needs_distributive(inst) -> bool:
    return inst.lat is not None and inst.lat.is_distributive


# ---- operator-side predicates -------------------------------------------

def _dia_monotone(inst) -> bool:
    leq, up = inst.delta.leq, inst.poset.up
    dia = inst.dia
    return all(leq(dia[a], dia[b]) for a in range(inst.n) for b in bits(up[a]))


def _box_monotone(inst) -> bool:
    leq, up = inst.delta.leq, inst.poset.up
    box = inst.box
    return all(leq(box[a], box[b]) for a in range(inst.n) for b in bits(up[a]))


def _dia_additive(inst) -> bool:
    # <>(a v b) <= <>a v <>b
    d, lat, dd = inst.delta, inst.lat, inst.dia
    return all(d.leq(dd[lat.join[a][b]], d.join[dd[a]][dd[b]])
               for a in range(inst.n) for b in range(inst.n))


def _box_multiplicative(inst) -> bool:
    # []a ^ []b <= [](a ^ b)
    d, lat, bb = inst.delta, inst.lat, inst.box
    return all(d.leq(d.meet[bb[a]][bb[b]], bb[lat.meet[a][b]])
               for a in range(inst.n) for b in range(inst.n))


def _dia_grounded(inst) -> bool:
    return inst.delta.leq(inst.dia[inst.lat.bot], inst.embed[inst.lat.bot])


def _box_capped(inst) -> bool:
    return inst.delta.leq(inst.embed[inst.lat.top], inst.box[inst.lat.top])


def _slanted_monotone(inst) -> bool:
    return _dia_monotone(inst) and _box_monotone(inst)


def _slanted_regular(inst) -> bool:
    d, lat = inst.delta, inst.lat
    dd, bb = inst.dia, inst.box
    return all(dd[lat.join[a][b]] == d.join[dd[a]][dd[b]]
               and bb[lat.meet[a][b]] == d.meet[bb[a]][bb[b]]
               for a in range(inst.n) for b in range(inst.n))


def _slanted_normal(inst) -> bool:
    return (_slanted_regular(inst)
            and inst.dia[inst.lat.bot] == inst.delta.bot
            and inst.box[inst.lat.top] == inst.delta.top)


# ---- laws quantified inside one instance ---------------------------------

def _law_rel_bounds(inst) -> bool:
    # a rel b forces <>a <= b and a <= []b
    d, embed = inst.delta, inst.embed
    return all(d.leq(inst.dia[a], embed[b]) and d.leq(embed[a], inst.box[b])
               for a in range(inst.n) for b in bits(inst.S.rows[a]))


def _law_dia_detects(inst) -> bool:
    d, embed = inst.delta, inst.embed
    return all((d.leq(inst.dia[a], embed[b])) == inst.S.prec.has(a, b)
               for a in range(inst.n) for b in range(inst.n))


def _law_box_detects(inst) -> bool:
    d, embed = inst.delta, inst.embed
    return all((d.leq(embed[a], inst.box[b])) == inst.S.prec.has(a, b)
               for a in range(inst.n) for b in range(inst.n))


def _small_enough_for_subsets(inst) -> bool:
    return inst.n <= _SUBSET_SCAN_CAP


def _down_directed_subsets(inst):
    p = inst.poset
    for m in range(1, 1 << inst.n):
        if is_down_directed(m, p):
            yield m


def _up_directed_subsets(inst):
    p = inst.poset
    for m in range(1, 1 << inst.n):
        if is_up_directed(m, p):
            yield m


def _image_of(inst, members: int) -> int:
    acc = 0
    for a in bits(members):
        acc |= inst.S.rows[a]
    return acc


def _preimage_of(inst, members: int) -> int:
    acc = 0
    for x in bits(members):
        acc |= inst.S.cols[x]
    return acc


def _law_directed_image(inst) -> bool:
    p = inst.poset
    return all(is_down_directed(_image_of(inst, m), p)
               for m in _down_directed_subsets(inst))


def _law_codirected_preimage(inst) -> bool:
    p = inst.poset
    return all(is_up_directed(_preimage_of(inst, m), p)
               for m in _up_directed_subsets(inst))


def _law_dia_of_meet(inst) -> bool:
    d, embed = inst.delta, inst.embed
    closed_eff = inst.ctx.ext.closed | 1 << d.top
    for m in _down_directed_subsets(inst):
        k = d.meet_all(mask_of(embed[a] for a in bits(m)))
        image = _image_of(inst, m)
        want = d.meet_all(mask_of(embed[c] for c in bits(image)))
        if inst.sigma[k] != want or not closed_eff >> want & 1:
            return False
    return True


def _law_box_of_join(inst) -> bool:
    d, embed = inst.delta, inst.embed
    open_eff = inst.ctx.ext.open | 1 << d.bot
    for m in _up_directed_subsets(inst):
        o = d.join_all(mask_of(embed[a] for a in bits(m)))
        pre = _preimage_of(inst, m)
        want = d.join_all(mask_of(embed[c] for c in bits(pre)))
        if inst.pi[o] != want or not open_eff >> want & 1:
            return False
    return True


def _law_dia_bound_reflects(inst) -> bool:
    d, embed = inst.delta, inst.embed
    for k in bits(inst.ctx.ext.closed):
        sk = inst.sigma[k]
        for b in range(inst.n):
            if d.leq(sk, embed[b]):
                if not any(d.leq(k, embed[a]) and inst.S.prec.has(a, b)
                           for a in range(inst.n)):
                    return False
    return True


def _law_dia_open_bound_reflects(inst) -> bool:
    d, embed = inst.delta, inst.embed
    for k in bits(inst.ctx.ext.closed):
        sk = inst.sigma[k]
        for o in bits(inst.ctx.ext.open):
            if d.leq(sk, o):
                if not any(d.leq(k, embed[a]) and d.leq(embed[b], o)
                           and inst.S.prec.has(a, b)
                           for a in range(inst.n) for b in range(inst.n)):
                    return False
    return True


def _law_box_bound_reflects(inst) -> bool:
    d, embed = inst.delta, inst.embed
    for o in bits(inst.ctx.ext.open):
        po = inst.pi[o]
        for a in range(inst.n):
            if d.leq(embed[a], po):
                if not any(d.leq(embed[b], o) and inst.S.prec.has(a, b)
                           for b in range(inst.n)):
                    return False
    return True


def _law_box_closed_bound_reflects(inst) -> bool:
    d, embed = inst.delta, inst.embed
    for o in bits(inst.ctx.ext.open):
        po = inst.pi[o]
        for k in bits(inst.ctx.ext.closed):
            if d.leq(k, po):
                if not any(d.leq(k, embed[a]) and d.leq(embed[b], o)
                           and inst.S.prec.has(a, b)
                           for a in range(inst.n) for b in range(inst.n)):
                    return False
    return True


# ---- inequality sides of the characterization results --------------------

def _ineq_dia_inflationary(inst) -> bool:
    d, embed = inst.delta, inst.embed
    return all(d.leq(embed[a], inst.dia[a]) for a in range(inst.n))


def _ineq_box_deflationary(inst) -> bool:
    d, embed = inst.delta, inst.embed
    return all(d.leq(inst.box[a], embed[a]) for a in range(inst.n))


def _ineq_dia_deflationary(inst) -> bool:
    d, embed = inst.delta, inst.embed
    return all(d.leq(inst.dia[a], embed[a]) for a in range(inst.n))


def _ineq_dia_expanding(inst) -> bool:
    # <>a <= <><>a
    d = inst.delta
    return all(d.leq(inst.dia[a], inst.sigma[inst.dia[a]]) for a in range(inst.n))


def _ineq_dia_collapsing(inst) -> bool:
    # <><>a <= <>a
    d = inst.delta
    return all(d.leq(inst.sigma[inst.dia[a]], inst.dia[a]) for a in range(inst.n))


def _ineq_dia_contraction(inst) -> bool:
    # <>a <= <>(a ^ <>a)
    d, embed = inst.delta, inst.embed
    return all(d.leq(inst.dia[a], inst.sigma[d.meet[embed[a]][inst.dia[a]]])
               for a in range(inst.n))


def _ineq_dia_meet_distribution(inst) -> bool:
    # <>(<>a ^ <>b) <= <>(a ^ b)
    d, lat = inst.delta, inst.lat
    return all(d.leq(inst.sigma[d.meet[inst.dia[a]][inst.dia[b]]],
                     inst.dia[lat.meet[a][b]])
               for a in range(inst.n) for b in range(inst.n))


def _ineq_neg_dia_is_box(inst) -> bool:
    # ~<>a = []~a
    neg = inst.ctx.neg_delta
    return all(neg[inst.dia[a]] == inst.box[inst.lat.neg[a]]
               for a in range(inst.n))


def _ineq_dia_neg_is_neg_box(inst) -> bool:
    # <>~a = ~[]a
    neg = inst.ctx.neg_delta
    return all(inst.dia[inst.lat.neg[a]] == neg[inst.box[a]]
               for a in range(inst.n))


def _ineq_box_join_absorption(inst) -> bool:
    # [](a v []b) <= []a v []b
    d, embed = inst.delta, inst.embed
    return all(d.leq(inst.pi[d.join[embed[a]][inst.box[b]]],
                     d.join[inst.box[a]][inst.box[b]])
               for a in range(inst.n) for b in range(inst.n))


def _ineq_box_join_coabsorption(inst) -> bool:
    # []a v []b <= [](a v []b)
    d, embed = inst.delta, inst.embed
    return all(d.leq(d.join[inst.box[a]][inst.box[b]],
                     inst.pi[d.join[embed[a]][inst.box[b]]])
               for a in range(inst.n) for b in range(inst.n))


def _ineq_box_join_distribution(inst) -> bool:
    # [](a v b) <= []([]a v []b)
    d, lat = inst.delta, inst.lat
    return all(d.leq(inst.box[lat.join[a][b]],
                     inst.pi[d.join[inst.box[a]][inst.box[b]]])
               for a in range(inst.n) for b in range(inst.n))


# ---- dual-space sides -----------------------------------------------------

def _rel_cond(cond: RelCondition):
    from ..duality import check_relational

    def run(inst) -> bool:
        return check_relational(inst.space, cond)[0]

    return run


def _law_spaces_isomorphic(inst) -> bool:
    from ..duality import spaces_isomorphic
    return spaces_isomorphic(inst.space, inst.space_pf)[0]


def _s9_both(inst) -> bool:
    return inst.flag(P.S9_FWD) is True and inst.flag(P.S9_BWD) is True


def _s9_rel_both(inst) -> bool:
    from ..duality import check_relational
    return (check_relational(inst.space, RelCondition.S9_FWD_REL)[0]
            and check_relational(inst.space, RelCondition.S9_BWD_REL)[0])


def _prop41_law(i: int):
    def run(inst) -> bool:
        return verify_prop41(inst.S, i)[0]

    return run


def _prop41_pre(inst) -> bool:
    return (inst.n <= 4 and _needs_distributive(inst)
            and inst.flag(P.DD) is True and inst.flag(P.UD) is True)


def _subordination_pre(inst) -> bool:
    return (_needs_distributive(inst) and inst.is_subordination)


def _s6_pre(inst) -> bool:
    # the equivalence leans on both detection laws, so it needs the
    # full bidirected package, not bare DD+UD
    rep = inst.ctx.neg_report
    return (_bidirected_pre(inst)
            and rep is not None and rep.antitone and rep.involutive
            and (rep.left_self_adjoint or rep.right_self_adjoint))


# ---- carrier-scoped: negation lifting laws --------------------------------

def _neg_sigma_laws(inst) -> bool:
    from ..completion import extend_negation_sigma
    ctx = inst.ctx
    lat, d = ctx.lat, ctx.delta
    table = extend_negation_sigma(ctx.ext, lat.neg)
    n, dn = lat.n, d.n
    antitone = all(d.leq(table[v], table[u])
                   for u in range(dn) for v in bits(d.poset.up[u]))
    adjoint = all(d.leq(table[u], v) == d.leq(table[v], u)
                  for u in range(dn) for v in range(dn))
    ok = antitone and adjoint
    if all(lat.leq(a, lat.neg[lat.neg[a]]) for a in range(n)):
        ok = ok and all(d.leq(u, table[table[u]]) for u in range(dn))
    if all(lat.neg[lat.neg[a]] == a for a in range(n)):
        ok = ok and all(table[table[u]] == u for u in range(dn))
    return ok


def _neg_pi_laws(inst) -> bool:
    from ..completion import extend_negation_pi
    ctx = inst.ctx
    lat, d = ctx.lat, ctx.delta
    table = extend_negation_pi(ctx.ext, lat.neg)
    n, dn = lat.n, d.n
    antitone = all(d.leq(table[v], table[u])
                   for u in range(dn) for v in bits(d.poset.up[u]))
    adjoint = all(d.leq(u, table[v]) == d.leq(v, table[u])
                  for u in range(dn) for v in range(dn))
    ok = antitone and adjoint
    if all(lat.leq(lat.neg[lat.neg[a]], a) for a in range(n)):
        ok = ok and all(d.leq(table[table[u]], u) for u in range(dn))
    if all(lat.neg[lat.neg[a]] == a for a in range(n)):
        ok = ok and all(table[table[u]] == u for u in range(dn))
    return ok


def _neg_sigma_pre(inst) -> bool:
    rep = inst.ctx.neg_report
    return rep is not None and rep.antitone and rep.left_self_adjoint


def _neg_pi_pre(inst) -> bool:
    rep = inst.ctx.neg_report
    return rep is not None and rep.antitone and rep.right_self_adjoint


def _directed_pre(inst) -> bool:
    return inst.flag(P.DD) is True and inst.flag(P.UD) is True


def _bidirected_pre(inst) -> bool:
    """Conjunction of the diamond-directed (WO+DD) and box-directed
    (SI+UD) classes, plus seriality both ways.  The transfer
    equivalences fail under bare DD+UD: the identity relation on the
    two-chain is directed and serial with both operators monotone, yet
    satisfies neither SI nor WO."""
    return (_flags(P.WO, P.DD, P.SI, P.UD)(inst)
            and inst.dia_serial and inst.box_serial)


CATALOG: tuple[CheckSpec, ...] = (
    # -- bounds and detection -------------------------------------------
    CheckSpec("bounds-of-related-pairs",
              "a rel b forces <>a <= b and a <= []b",
              "law", law=_law_rel_bounds),
    CheckSpec("diamond-detects-rel",
              "under WO+DD, <>a <= b exactly when a rel b",
              "law", precondition=_and(_flags(P.WO, P.DD), _dia_serial),
              law=_law_dia_detects),
    CheckSpec("box-detects-rel",
              "under SI+UD, a <= []b exactly when a rel b",
              "law", precondition=_and(_flags(P.SI, P.UD), _box_serial),
              law=_law_box_detects),
    # -- directedness from the binary rules ------------------------------
    CheckSpec("or-implies-updirected", "OR forces UD on lattice carriers",
              "implies", precondition=_needs_lattice,
              lhs=_flag_value(P.OR), rhs=_flag_value(P.UD)),
    CheckSpec("and-implies-downdirected", "AND forces DD on lattice carriers",
              "implies", precondition=_needs_lattice,
              lhs=_flag_value(P.AND), rhs=_flag_value(P.DD)),
    CheckSpec("updirected-iff-or-under-si", "under SI, UD and OR coincide",
              "iff", precondition=_flags(P.SI),
              lhs=_flag_value(P.UD), rhs=_flag_value(P.OR)),
    CheckSpec("downdirected-iff-and-under-wo", "under WO, DD and AND coincide",
              "iff", precondition=_flags(P.WO),
              lhs=_flag_value(P.DD), rhs=_flag_value(P.AND)),
    # -- rules force operator laws ---------------------------------------
    CheckSpec("si-makes-diamond-monotone", "SI makes the diamond monotone",
              "implies", lhs=_flag_value(P.SI), rhs=_dia_monotone),
    CheckSpec("and-makes-box-multiplicative-dl",
              "on distributive carriers, SI+AND force []a ^ []b <= [](a ^ b)",
              "implies", precondition=_needs_distributive,
              lhs=_flags(P.SI, P.AND), rhs=_box_multiplicative),
    CheckSpec("and-makes-box-multiplicative-ud",
              "SI+UD+AND force []a ^ []b <= [](a ^ b)",
              "implies", precondition=_needs_lattice,
              lhs=_flags(P.SI, P.UD, P.AND), rhs=_box_multiplicative),
    CheckSpec("wo-makes-box-monotone", "WO makes the box monotone",
              "implies", lhs=_flag_value(P.WO), rhs=_box_monotone),
    CheckSpec("or-makes-diamond-additive-dl",
              "on distributive carriers, WO+OR force <>(a v b) <= <>a v <>b",
              "implies", precondition=_needs_distributive,
              lhs=_flags(P.WO, P.OR), rhs=_dia_additive),
    CheckSpec("or-makes-diamond-additive-dd",
              "WO+DD+OR force <>(a v b) <= <>a v <>b",
              "implies", precondition=_needs_lattice,
              lhs=_flags(P.WO, P.DD, P.OR), rhs=_dia_additive),
    CheckSpec("bot-rule-grounds-diamond", "the bottom rule forces <>F <= F",
              "implies", precondition=_needs_lattice,
              lhs=_flag_value(P.BOT), rhs=_dia_grounded),
    CheckSpec("top-rule-caps-box", "the top rule forces T <= []T",
              "implies", precondition=_needs_lattice,
              lhs=_flag_value(P.TOP), rhs=_box_capped),
    # -- converses under directedness ------------------------------------
    CheckSpec("si-iff-diamond-monotone", "under WO+DD, SI = diamond monotone",
              "iff", precondition=_and(_flags(P.WO, P.DD), _dia_serial),
              lhs=_flag_value(P.SI), rhs=_dia_monotone),
    CheckSpec("or-iff-diamond-additive",
              "under WO+DD, OR = diamond join-subadditivity",
              "iff", precondition=_and(_flags(P.WO, P.DD), _dia_serial),
              lhs=_flag_value(P.OR), rhs=_dia_additive),
    CheckSpec("bot-iff-diamond-grounded", "under WO+DD, the bottom rule = <>F <= F",
              "iff", precondition=_and(_flags(P.WO, P.DD), _dia_serial),
              lhs=_flag_value(P.BOT), rhs=_dia_grounded),
    CheckSpec("wo-iff-box-monotone", "under SI+UD, WO = box monotone",
              "iff", precondition=_and(_flags(P.SI, P.UD), _box_serial),
              lhs=_flag_value(P.WO), rhs=_box_monotone),
    CheckSpec("and-iff-box-multiplicative",
              "under SI+UD, AND = box meet-submultiplicativity",
              "iff", precondition=_and(_flags(P.SI, P.UD), _box_serial),
              lhs=_flag_value(P.AND), rhs=_box_multiplicative),
    CheckSpec("top-iff-box-capped", "under SI+UD, the top rule = T <= []T",
              "iff", precondition=_and(_flags(P.SI, P.UD), _box_serial),
              lhs=_flag_value(P.TOP), rhs=_box_capped),
    # -- transfer of the named classes -----------------------------------
    CheckSpec("monotone-transfer",
              "on bidirected instances, SI+WO = both operators monotone",
              "iff", precondition=_bidirected_pre,
              lhs=_flags(P.SI, P.WO), rhs=_slanted_monotone),
    CheckSpec("regular-transfer",
              "on bidirected instances, the regular rule set = regular operators",
              "iff", precondition=_bidirected_pre,
              lhs=_flags(P.SI, P.WO, P.OR, P.AND), rhs=_slanted_regular),
    CheckSpec("normality-transfer",
              "on bidirected instances, the full rule set = normal operators",
              "iff", precondition=_bidirected_pre,
              lhs=_flags(P.SI, P.WO, P.OR, P.AND, P.BOT, P.TOP),
              rhs=_slanted_normal),
    # -- directed families through the operators -------------------------
    CheckSpec("directed-image-directed",
              "under SI+DD+WO, images of down-directed sets are down-directed",
              "law",
              precondition=lambda inst: (_flags(P.SI, P.DD, P.WO)(inst)
                                         and _small_enough_for_subsets(inst)),
              law=_law_directed_image),
    CheckSpec("diamond-of-meet",
              "under SI+DD+WO, <> of a directed meet is the meet over the image",
              "law",
              precondition=lambda inst: (_flags(P.SI, P.DD, P.WO)(inst)
                                         and _small_enough_for_subsets(inst)),
              law=_law_dia_of_meet),
    CheckSpec("diamond-bound-reflects",
              "under SI+DD+WO, <>k <= b reveals a rel-pair above k",
              "law", precondition=_and(_flags(P.SI, P.DD, P.WO), _dia_serial),
              law=_law_dia_bound_reflects),
    CheckSpec("diamond-open-bound-reflects",
              "under SI+DD+WO, <>k <= o reveals a rel-pair across k, o",
              "law", precondition=_and(_flags(P.SI, P.DD, P.WO), _dia_serial),
              law=_law_dia_open_bound_reflects),
    CheckSpec("codirected-preimage-directed",
              "under WO+UD+SI, preimages of up-directed sets are up-directed",
              "law",
              precondition=lambda inst: (_flags(P.WO, P.UD, P.SI)(inst)
                                         and _small_enough_for_subsets(inst)),
              law=_law_codirected_preimage),
    CheckSpec("box-of-join",
              "under WO+UD+SI, [] of a directed join is the join over the preimage",
              "law",
              precondition=lambda inst: (_flags(P.WO, P.UD, P.SI)(inst)
                                         and _small_enough_for_subsets(inst)),
              law=_law_box_of_join),
    CheckSpec("box-bound-reflects",
              "under WO+UD+SI, a <= []o reveals a rel-pair below o",
              "law", precondition=_and(_flags(P.WO, P.UD, P.SI), _box_serial),
              law=_law_box_bound_reflects),
    CheckSpec("box-closed-bound-reflects",
              "under WO+UD+SI, k <= []o reveals a rel-pair across k, o",
              "law", precondition=_and(_flags(P.WO, P.UD, P.SI), _box_serial),
              law=_law_box_closed_bound_reflects),
    # -- order/relation characterizations --------------------------------
    CheckSpec("rel-below-order-iff-inflationary-diamond",
              "rel inside the order = a <= <>a",
              "iff", lhs=_flag_value(P.PREC_IN_LEQ), rhs=_ineq_dia_inflationary),
    CheckSpec("rel-below-order-iff-deflationary-box",
              "rel inside the order = []a <= a",
              "iff", lhs=_flag_value(P.PREC_IN_LEQ), rhs=_ineq_box_deflationary),
    CheckSpec("order-below-rel-iff-deflationary-diamond",
              "under WO+DD, order inside rel = <>a <= a",
              "iff", precondition=_and(_flags(P.WO, P.DD), _dia_serial),
              lhs=_flag_value(P.LEQ_IN_PREC), rhs=_ineq_dia_deflationary),
    CheckSpec("t-iff-diamond-expanding",
              "under WO+DD+SI, transitivity of rel = <>a <= <><>a",
              "iff", precondition=_and(_flags(P.WO, P.DD, P.SI), _dia_serial),
              lhs=_flag_value(P.T), rhs=_ineq_dia_expanding),
    CheckSpec("d-iff-diamond-collapsing",
              "under WO+DD+SI, density of rel = <><>a <= <>a",
              "iff", precondition=_and(_flags(P.WO, P.DD, P.SI), _dia_serial),
              lhs=_flag_value(P.D), rhs=_ineq_dia_collapsing),
    CheckSpec("ct-iff-diamond-contraction",
              "under WO+DD+SI, the contraction rule = <>a <= <>(a ^ <>a)",
              "iff",
              precondition=lambda inst: (_flags(P.WO, P.DD, P.SI)(inst)
                                         and _needs_lattice(inst)
                                         and inst.dia_serial),
              lhs=_flag_value(P.CT), rhs=_ineq_dia_contraction),
    CheckSpec("sl2-iff-diamond-meet-distribution",
              "under WO+DD+SI, SL2 = <>(<>a ^ <>b) <= <>(a ^ b)",
              "iff",
              precondition=lambda inst: (_flags(P.WO, P.DD, P.SI)(inst)
                                         and _needs_lattice(inst)
                                         and inst.dia_serial),
              lhs=_flag_value(P.SL2), rhs=_ineq_dia_meet_distribution),
    CheckSpec("ct-implies-t-under-si", "under SI, contraction forces transitivity",
              "implies", precondition=lambda inst: (_flags(P.SI)(inst)
                                                    and _needs_lattice(inst)),
              lhs=_flag_value(P.CT), rhs=_flag_value(P.T)),
    CheckSpec("s6-iff-negated-diamond-is-box",
              "on directed involutive carriers, S6 = (~<>a is []~a)",
              "iff", precondition=_s6_pre,
              lhs=_flag_value(P.S6), rhs=_ineq_neg_dia_is_box),
    CheckSpec("s6-iff-diamond-neg-is-neg-box",
              "on directed involutive carriers, S6 = (<>~a is ~[]a)",
              "iff", precondition=_s6_pre,
              lhs=_flag_value(P.S6), rhs=_ineq_dia_neg_is_neg_box),
    CheckSpec("s9fwd-iff-box-join-absorption",
              "under SI+UD+WO, forward S9 = [](a v []b) <= []a v []b",
              "iff", precondition=_and(_flags(P.SI, P.UD, P.WO), _box_serial),
              lhs=_flag_value(P.S9_FWD), rhs=_ineq_box_join_absorption),
    CheckSpec("s9bwd-iff-box-join-coabsorption",
              "under SI+UD+WO, backward S9 = []a v []b <= [](a v []b)",
              "iff", precondition=_and(_flags(P.SI, P.UD, P.WO), _box_serial),
              lhs=_flag_value(P.S9_BWD), rhs=_ineq_box_join_coabsorption),
    CheckSpec("sl1-iff-box-join-distribution",
              "under SI+UD+WO, SL1 = [](a v b) <= []([]a v []b)",
              "iff", precondition=_and(_flags(P.SI, P.UD, P.WO), _box_serial),
              lhs=_flag_value(P.SL1), rhs=_ineq_box_join_distribution),
    # -- closure extremality ----------------------------------------------
    CheckSpec("closure1-extremal", "system-1 operators are extremal",
              "law", precondition=_prop41_pre, law=_prop41_law(1)),
    CheckSpec("closure2-extremal", "system-2 operators are extremal",
              "law", precondition=_prop41_pre, law=_prop41_law(2)),
    CheckSpec("closure3-extremal", "system-3 diamond is extremal",
              "law", precondition=_prop41_pre, law=_prop41_law(3)),
    CheckSpec("closure4-extremal", "system-4 diamond is extremal",
              "law", precondition=_prop41_pre, law=_prop41_law(4)),
    # -- dual spaces -------------------------------------------------------
    CheckSpec("two-space-constructions-isomorphic",
              "irreducible-point and prime-filter spaces are isomorphic",
              "law", precondition=_subordination_pre, law=_law_spaces_isomorphic),
    CheckSpec("rel-below-order-iff-space-reflexive",
              "rel inside the order = reflexive dual relation",
              "iff", precondition=_subordination_pre,
              lhs=_flag_value(P.PREC_IN_LEQ), rhs=_rel_cond(RelCondition.REFLEXIVE)),
    CheckSpec("d-iff-space-transitive",
              "density of rel = transitive dual relation",
              "iff", precondition=_subordination_pre,
              lhs=_flag_value(P.D), rhs=_rel_cond(RelCondition.TRANSITIVE)),
    CheckSpec("t-iff-space-dense",
              "transitivity of rel = dense dual relation",
              "iff", precondition=_subordination_pre,
              lhs=_flag_value(P.T), rhs=_rel_cond(RelCondition.DENSE)),
    CheckSpec("properness-matches-space",
              "nonvanishing box below nonzero elements = proper dual relation",
              "iff", precondition=_subordination_pre,
              lhs=_flag_value(P.PROPER), rhs=_rel_cond(RelCondition.PROPER_REL)),
    CheckSpec("ct-relational-correspondence",
              "contraction rule = its dual-space condition",
              "iff", precondition=_subordination_pre,
              lhs=_flag_value(P.CT), rhs=_rel_cond(RelCondition.CT_REL)),
    CheckSpec("s9-relational-correspondence",
              "S9 = its dual-space condition",
              "iff", precondition=_subordination_pre,
              lhs=_s9_both, rhs=_s9_rel_both),
    CheckSpec("sl1-relational-correspondence",
              "SL1 = its dual-space condition",
              "iff", precondition=_subordination_pre,
              lhs=_flag_value(P.SL1), rhs=_rel_cond(RelCondition.SL1_REL)),
    CheckSpec("sl2-relational-correspondence",
              "SL2 = its dual-space condition",
              "iff", precondition=_subordination_pre,
              lhs=_flag_value(P.SL2), rhs=_rel_cond(RelCondition.SL2_REL)),
    # -- carrier-level negation lifting -----------------------------------
    CheckSpec("sigma-negation-extension-laws",
              "the sigma lifting of a left-adjoint negation keeps its laws",
              "law", scope="carrier", precondition=_neg_sigma_pre,
              law=_neg_sigma_laws),
    CheckSpec("pi-negation-extension-laws",
              "the pi lifting of a right-adjoint negation keeps its laws",
              "law", scope="carrier", precondition=_neg_pi_pre,
              law=_neg_pi_laws),
)

CHECKS_BY_NAME = {spec.name: spec for spec in CATALOG}
