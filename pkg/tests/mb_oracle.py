"""Independent brute-force oracle for the nonstandard matrix.

Values are full function tables f: B -> B (tuples indexed by element number),
built from one-variable terms and manipulated pointwise over every algebra
element. Nothing here touches the package's pair representation or its
evaluator; agreement between the two routes is what the tests assert.
"""

from __future__ import annotations

from illoc.syntax import ActRef, And, Atom, Force, Implies, Not, Or

# --- base algebra on frozensets ---


def elements(atoms: tuple[str, ...]) -> list[frozenset]:
    out = []
    for index in range(1 << len(atoms)):
        out.append(frozenset(a for i, a in enumerate(atoms) if index >> i & 1))
    return out


def el_index(atoms: tuple[str, ...], el: frozenset) -> int:
    return sum(1 << i for i, a in enumerate(atoms) if a in el)


# --- function tables ---


def term_table(atoms, u: frozenset, v: frozenset) -> tuple:
    top = frozenset(atoms)
    return tuple((u & a) | (v & (top - a)) for a in elements(atoms))


def const_table(atoms, c: frozenset) -> tuple:
    return tuple(c for _ in elements(atoms))


def is_const(t: tuple) -> bool:
    return all(v == t[0] for v in t)


def t_neg(atoms, t):
    top = frozenset(atoms)
    return tuple(top - v for v in t)


def t_inf(t1, t2):
    return tuple(a & b for a, b in zip(t1, t2))


def t_sup(t1, t2):
    return tuple(a | b for a, b in zip(t1, t2))


def t_content_neg(atoms, t):
    top = frozenset(atoms)
    els = elements(atoms)
    return tuple(t[el_index(atoms, top - a)] for a in els)


def t_leq(atoms, t1, t2) -> bool:
    c1, c2 = is_const(t1), is_const(t2)
    if c1 and c2:
        return t1[0] <= t2[0]
    if c1:
        return False
    if c2:
        return True
    return all(a <= b for a, b in zip(t1, t2))


def t_osup(t1, t2):
    c1, c2 = is_const(t1), is_const(t2)
    if c1 and c2:
        return tuple(a | b for a, b in zip(t1, t2))
    if c1:
        return t1
    if c2:
        return t2
    return t_sup(t1, t2)


def t_oinf(t1, t2):
    c1, c2 = is_const(t1), is_const(t2)
    if c1 and c2:
        return tuple(a & b for a, b in zip(t1, t2))
    if c1:
        return t2
    if c2:
        return t1
    return t_inf(t1, t2)


# --- the matrix connectives on tables ---


def t_mb_neg(atoms, t):
    return t_neg(atoms, t)


def t_mb_and(t1, t2):
    c1, c2 = is_const(t1), is_const(t2)
    if c1 and c2:
        return t_inf(t1, t2)
    if c1 or c2:
        return t_oinf(t1, t2)
    return t_sup(t1, t2)


def t_mb_or(t1, t2):
    c1, c2 = is_const(t1), is_const(t2)
    if c1 and c2:
        return t_sup(t1, t2)
    if c1 or c2:
        return t_osup(t1, t2)
    return t_inf(t1, t2)


def t_mb_imp(atoms, t1, t2):
    return t_sup(t_neg(atoms, t_osup(t1, t2)), t2)


# --- evaluation (acts keyed structurally by their Force node) ---


def oracle_eval(formula, atoms, mode, assignment, subvalues):
    """assignment maps ('atom', name) to an element and act/gen/sig keys to tables."""

    def has_force(f) -> bool:
        if isinstance(f, Force):
            return True
        if isinstance(f, Not):
            return has_force(f.body)
        if isinstance(f, (And, Or, Implies)):
            return has_force(f.left) or has_force(f.right)
        return False

    def extend(force, content):
        if isinstance(content, Atom):
            return assignment[("gen", force, content.name)]
        if isinstance(content, Not):
            return t_content_neg(atoms, extend(force, content.body))
        if isinstance(content, And):
            left, right = extend(force, content.left), extend(force, content.right)
            return t_mb_and(left, right) if mode == "connective" else t_inf(left, right)
        if isinstance(content, Or):
            left, right = extend(force, content.left), extend(force, content.right)
            return t_mb_or(left, right) if mode == "connective" else t_sup(left, right)
        if isinstance(content, Implies):
            left, right = extend(force, content.left), extend(force, content.right)
            if mode == "connective":
                return t_mb_imp(atoms, left, right)
            return t_sup(t_content_neg(atoms, left), right)
        raise TypeError(content)

    def ev(f):
        if isinstance(f, Atom):
            return const_table(atoms, assignment[("atom", f.name)])
        if isinstance(f, Not):
            return t_mb_neg(atoms, ev(f.body))
        if isinstance(f, And):
            return t_mb_and(ev(f.left), ev(f.right))
        if isinstance(f, Or):
            return t_mb_or(ev(f.left), ev(f.right))
        if isinstance(f, Implies):
            return t_mb_imp(atoms, ev(f.left), ev(f.right))
        if isinstance(f, Force):
            if has_force(f.content):
                value = t_mb_imp(atoms, assignment[("sig", f.force)], ev(f.content))
            elif mode == "free":
                value = assignment[("act", f)]
            else:
                value = extend(f.force, f.content)
            subvalues.append(value)
            return value
        raise TypeError(f)

    return ev(formula)


def oracle_slots(formula, atoms, mode):
    """Slot keys in evaluation order, each with its enumeration domain."""

    def has_force(f) -> bool:
        if isinstance(f, Force):
            return True
        if isinstance(f, Not):
            return has_force(f.body)
        if isinstance(f, (And, Or, Implies)):
            return has_force(f.left) or has_force(f.right)
        return False

    def content_atoms(f, found):
        if isinstance(f, Atom):
            found.setdefault(f.name)
        elif isinstance(f, Not):
            content_atoms(f.body, found)
        elif isinstance(f, (And, Or, Implies)):
            content_atoms(f.left, found)
            content_atoms(f.right, found)

    ordered: dict = {}

    def collect(f):
        if isinstance(f, Atom):
            ordered.setdefault(("atom", f.name))
        elif isinstance(f, Not):
            collect(f.body)
        elif isinstance(f, (And, Or, Implies)):
            collect(f.left)
            collect(f.right)
        elif isinstance(f, Force):
            if has_force(f.content):
                ordered.setdefault(("sig", f.force))
                collect(f.content)
            elif mode == "free":
                ordered.setdefault(("act", f))
            else:
                found: dict = {}
                content_atoms(f.content, found)
                for name in found:
                    ordered.setdefault(("gen", f.force, name))
        elif isinstance(f, ActRef):
            raise ValueError("oracle expects act-free formulas")

    collect(formula)

    els = elements(atoms)
    nonconst = [
        term_table(atoms, u, v) for u in els for v in els if u != v
    ]
    slots = []
    atom_keys = [k for k in ordered if k[0] == "atom"]
    act_keys = [k for k in ordered if k[0] == "act"]
    gen_keys = [k for k in ordered if k[0] == "gen"]
    sig_keys = [k for k in ordered if k[0] == "sig"]
    for key in atom_keys:
        slots.append((key, els))
    for key in act_keys + gen_keys + sig_keys:
        slots.append((key, nonconst))
    return slots


def oracle_status(formula, atoms, mode, admissible_only=True):
    """(status, first witness index or None, space size) by direct scanning."""
    slots = oracle_slots(formula, atoms, mode)
    sizes = [len(domain) for _, domain in slots]
    total = 1
    for size in sizes:
        total *= size
    top_table = const_table(atoms, frozenset(atoms))
    for index in range(total):
        rest = index
        assignment = {}
        for key, domain in reversed(slots):
            rest, choice = divmod(rest, len(domain))
            assignment[key] = domain[choice]
        subvalues: list = []
        value = oracle_eval(formula, atoms, mode, assignment, subvalues)
        if admissible_only and any(is_const(t) for t in subvalues):
            continue
        if value != top_table:
            return ("refuted", index, total)
    return ("tautology", None, total)
