"""Workspace documents: parsing, validation and construction of the named objects.

A workspace is a JSON object::

    {
      "smashcalc-version": "1",
      "field": "Q" | "Fp:<prime>",
      "hopf":       {name: {"kind": "cyclic", "order": 2}, ...},
      "algebras":   {name: {"kind": "truncated-polynomial", "order": 2}, ...},
      "quivers":    {name: {"vertices": [...], "arrows": [[name, source, target], ...]}},
      "actions":    {name: {"hopf": ..., "kind": "group-images", "algebra": ..., "images": {...}}},
      "characters": {name: {"hopf": ..., "values": [...]}},
      "morphisms":  {name: {"algebra" | "hopf": ..., "matrix": [[...], ...]}},
      "bimodules":  {name: {"action": ..., "kind": "twisted", "twist": morphism}},
      "tasks":      [{"name": ..., "kind": ..., ...}, ...]
    }

Structure constants are sparse entries ``[i, j, k, c]`` meaning e_i·e_j has
coefficient c at e_k. Matrices are lists of rows; column j is the image of
basis element j. Scalars are integers or fraction strings such as ``"-1/2"``.
"""

import json
import logging
import threading
from pathlib import Path as FilePath
from typing import Any, Callable, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError, model_validator

from ..core import config as core_config
from ..core.algebra import FinDimAlgebra
from ..core.exceptions import SmashcalcError
from ..core.field import Field as GroundField
from ..core.linalg import LinearMap
from ..cycompletion.quiver import Quiver, QuiverAction, path_algebra
from ..equivariant.bimodule import EquivariantBimodule
from ..hopf.characters import Character
from ..hopf.hopf import HopfAlgebra
from ..hopf.library import (
    cyclic_group_algebra,
    dual_cyclic_group_algebra,
    group_algebra,
    matrix_group_algebra,
    sweedler_algebra,
    trivial_hopf,
)
from ..koszul.polynomial import PolynomialModuleAlgebra
from ..smash.action import ModuleAlgebraAction
from . import config
from .exceptions import WorkspaceError

logger = logging.getLogger(__name__)

Coefficient = Union[int, str]
Matrix = List[List[Coefficient]]
Entry = Tuple[int, int, int, Coefficient]

TASK_KINDS = (
    "verify", "smash", "identities", "classify", "nakayama", "hdet",
    "cy-smash", "as-check", "ss-check", "cy-complete", "deform", "iso-check",
)


class _Spec(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class HopfSpec(_Spec):
    """A Hopf algebra from the library or from structure constants."""
    kind: Literal["trivial", "cyclic", "dual-cyclic", "sweedler", "group", "matrix-group", "structure"]
    order: Optional[int] = Field(default=None, ge=1)
    generator: str = "g"
    table: Optional[List[List[int]]] = None
    labels: Optional[List[str]] = None
    generators: Optional[List[Matrix]] = None
    mul: List[Entry] = []
    unit: List[Tuple[int, Coefficient]] = [(0, 1)]
    comul: List[Entry] = []
    counit: List[Coefficient] = []
    antipode: Optional[Matrix] = None

    @model_validator(mode="after")
    def _kind_fields(self) -> "HopfSpec":
        needed = {
            "cyclic": ["order"],
            "dual-cyclic": ["order"],
            "group": ["table"],
            "matrix-group": ["generators"],
            "structure": ["labels", "antipode"],
        }.get(self.kind, [])
        missing = [name for name in needed if getattr(self, name) is None]
        if missing:
            raise ValueError(f"kind {self.kind!r} needs {', '.join(missing)}")
        return self


class AlgebraSpec(_Spec):
    """A finite-dimensional algebra."""
    kind: Literal["ground", "truncated-polynomial", "path", "structure"]
    order: Optional[int] = Field(default=None, ge=1)
    variable: str = "x"
    quiver: Optional[str] = None
    length: Optional[int] = Field(default=None, ge=0)
    labels: Optional[List[str]] = None
    mul: List[Entry] = []
    unit: List[Tuple[int, Coefficient]] = [(0, 1)]
    degrees: Optional[List[int]] = None

    @model_validator(mode="after")
    def _kind_fields(self) -> "AlgebraSpec":
        needed = {"truncated-polynomial": "order", "path": "quiver", "structure": "labels"}.get(self.kind)
        if needed and getattr(self, needed) is None:
            raise ValueError(f"kind {self.kind!r} needs {needed}")
        return self


class QuiverSpec(_Spec):
    vertices: List[Union[str, int]]
    arrows: List[List[Union[str, int]]] = []

    @model_validator(mode="after")
    def _arrow_shape(self) -> "QuiverSpec":
        for a in self.arrows:
            if len(a) not in (3, 4):
                raise ValueError(f"arrow {a!r} is not [name, source, target] or [name, source, target, degree]")
        return self


class ActionSpec(_Spec):
    """An action of a Hopf algebra on an algebra, a quiver or a polynomial ring."""
    hopf: str
    kind: Literal["trivial", "matrices", "group-images", "quiver", "polynomial"]
    algebra: Optional[str] = None
    quiver: Optional[str] = None
    operators: Optional[List[Matrix]] = None
    images: Dict[str, Matrix] = {}
    vertices: Dict[str, Dict[str, str]] = {}
    arrows: Dict[str, Dict[str, str]] = {}
    length: Optional[int] = Field(default=None, ge=0)
    variables: Optional[int] = Field(default=None, ge=0)
    truncation: Optional[int] = Field(default=None, ge=0)
    augmentation: Optional[List[Coefficient]] = None

    @model_validator(mode="after")
    def _kind_fields(self) -> "ActionSpec":
        if self.kind in ("trivial", "matrices", "group-images") and self.algebra is None:
            raise ValueError(f"kind {self.kind!r} needs algebra")
        if self.kind == "matrices" and self.operators is None:
            raise ValueError("kind 'matrices' needs operators")
        if self.kind == "quiver" and self.quiver is None:
            raise ValueError("kind 'quiver' needs quiver")
        return self


class CharacterSpec(_Spec):
    hopf: str
    values: List[Coefficient]


class MorphismSpec(_Spec):
    """A linear endomorphism of an algebra or of a Hopf algebra."""
    algebra: Optional[str] = None
    hopf: Optional[str] = None
    matrix: Matrix

    @model_validator(mode="after")
    def _one_target(self) -> "MorphismSpec":
        if (self.algebra is None) == (self.hopf is None):
            raise ValueError("a morphism names exactly one of algebra or hopf")
        return self


class BimoduleSpec(_Spec):
    """A regular or twisted equivariant bimodule over an action."""
    action: str
    kind: Literal["regular", "twisted"] = "regular"
    twist: Optional[str] = None
    index: int = 0


class TaskSpec(_Spec):
    """One named task; which references it needs depends on its kind."""
    name: str
    kind: Literal[TASK_KINDS]
    hopf: Optional[str] = None
    algebra: Optional[str] = None
    action: Optional[str] = None
    quiver: Optional[str] = None
    bimodule: Optional[str] = None
    sigma: Optional[str] = None
    character: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=1)
    truncation: Optional[int] = Field(default=None, ge=0)
    max_degree: Optional[int] = Field(default=None, ge=0, alias="max-degree")
    bound: Optional[int] = Field(default=None, ge=1)
    indices: Optional[List[int]] = None
    sigma_index: int = Field(default=0, alias="sigma-index")
    potential: List[Tuple[List[str], Coefficient]] = []
    weights: Dict[str, Coefficient] = {}
    coefficients: Literal["regular", "trivial"] = "regular"
    expect: Dict[str, Any] = {}


class WorkspaceDocument(_Spec):
    """A validated workspace."""
    version: str = Field(default=config.SMASHCALC_VERSION, alias="smashcalc-version")
    field_descriptor: str = Field(default=core_config.DEFAULT_FIELD, alias="field")
    hopf: Dict[str, HopfSpec] = {}
    algebras: Dict[str, AlgebraSpec] = {}
    quivers: Dict[str, QuiverSpec] = {}
    actions: Dict[str, ActionSpec] = {}
    characters: Dict[str, CharacterSpec] = {}
    morphisms: Dict[str, MorphismSpec] = {}
    bimodules: Dict[str, BimoduleSpec] = {}
    tasks: List[TaskSpec] = []

    @model_validator(mode="after")
    def _supported_version(self) -> "WorkspaceDocument":
        if self.version not in config.SUPPORTED_VERSIONS:
            raise ValueError(f"unsupported smashcalc-version {self.version!r}")
        return self


# --- static checks -----------------------------------------------------------------

def _static_hopf_dim(spec: HopfSpec) -> Optional[int]:
    if spec.kind == "trivial":
        return 1
    if spec.kind in ("cyclic", "dual-cyclic"):
        return spec.order
    if spec.kind == "sweedler":
        return 4
    if spec.kind == "group":
        return len(spec.table)
    if spec.kind == "structure":
        return len(spec.labels)
    return None


def _static_algebra_dim(spec: AlgebraSpec) -> Optional[int]:
    if spec.kind == "ground":
        return 1
    if spec.kind == "truncated-polynomial":
        return spec.order
    if spec.kind == "structure":
        return len(spec.labels)
    return None


def _check_entries(where: str, entries: List[Entry], dim: int, errors: List[Tuple[str, str]]) -> None:
    for k, (i, j, t, _) in enumerate(entries):
        if not all(0 <= x < dim for x in (i, j, t)):
            errors.append((f"{where}[{k}]", f"index out of range for dimension {dim}"))


def _check_matrix(where: str, matrix: Matrix, dim: Optional[int], errors: List[Tuple[str, str]]) -> None:
    rows = len(matrix)
    cols = {len(row) for row in matrix}
    if len(cols) > 1:
        errors.append((where, "ragged matrix rows"))
        return
    width = cols.pop() if cols else 0
    if dim is not None and (rows != dim or width != dim):
        errors.append((where, f"matrix of shape {rows}x{width}, expected {dim}x{dim}"))


def cross_check(doc: WorkspaceDocument) -> List[Tuple[str, str]]:
    """Dangling references and dimension mismatches visible without building anything."""
    errors: List[Tuple[str, str]] = []

    def ref(where: str, table: Dict[str, Any], name: Optional[str], what: str) -> None:
        if name is not None and name not in table:
            errors.append((where, f"unknown {what} {name!r}"))

    for name, h in doc.hopf.items():
        where = f"hopf.{name}"
        if h.kind == "structure":
            n = len(h.labels)
            _check_entries(f"{where}.mul", h.mul, n, errors)
            _check_entries(f"{where}.comul", h.comul, n, errors)
            if len(h.counit) != n:
                errors.append((f"{where}.counit", f"{len(h.counit)} values for dimension {n}"))
            _check_matrix(f"{where}.antipode", h.antipode, n, errors)
            for k, (i, _) in enumerate(h.unit):
                if not 0 <= i < n:
                    errors.append((f"{where}.unit[{k}]", f"index out of range for dimension {n}"))
        if h.kind == "group" and any(len(row) != len(h.table) for row in h.table):
            errors.append((f"{where}.table", "group table is not square"))
    for name, a in doc.algebras.items():
        where = f"algebras.{name}"
        ref(f"{where}.quiver", doc.quivers, a.quiver, "quiver")
        if a.kind == "structure":
            n = len(a.labels)
            _check_entries(f"{where}.mul", a.mul, n, errors)
            for k, (i, _) in enumerate(a.unit):
                if not 0 <= i < n:
                    errors.append((f"{where}.unit[{k}]", f"index out of range for dimension {n}"))
            if a.degrees is not None and len(a.degrees) != n:
                errors.append((f"{where}.degrees", f"{len(a.degrees)} degrees for dimension {n}"))
    for name, q in doc.quivers.items():
        vertices = {str(v) for v in q.vertices}
        for k, arrow in enumerate(q.arrows):
            for end in arrow[1:3]:
                if str(end) not in vertices:
                    errors.append((f"quivers.{name}.arrows[{k}]", f"unknown vertex {end!r}"))
    for name, act in doc.actions.items():
        where = f"actions.{name}"
        ref(f"{where}.hopf", doc.hopf, act.hopf, "hopf algebra")
        ref(f"{where}.algebra", doc.algebras, act.algebra, "algebra")
        ref(f"{where}.quiver", doc.quivers, act.quiver, "quiver")
        dim = _static_algebra_dim(doc.algebras[act.algebra]) if act.algebra in doc.algebras else None
        hdim = _static_hopf_dim(doc.hopf[act.hopf]) if act.hopf in doc.hopf else None
        if act.operators is not None and act.kind == "matrices":
            if hdim is not None and len(act.operators) != hdim:
                errors.append((f"{where}.operators", f"{len(act.operators)} matrices for {act.hopf} of dimension {hdim}"))
            for k, m in enumerate(act.operators):
                _check_matrix(f"{where}.operators[{k}]", m, dim, errors)
        for label, m in act.images.items():
            _check_matrix(f"{where}.images.{label}", m, dim, errors)
        if act.augmentation is not None and dim is not None and len(act.augmentation) != dim:
            errors.append((f"{where}.augmentation", f"{len(act.augmentation)} values for dimension {dim}"))
        if act.kind == "polynomial" and act.operators is not None:
            for k, m in enumerate(act.operators):
                _check_matrix(f"{where}.operators[{k}]", m, act.variables, errors)
    for name, ch in doc.characters.items():
        ref(f"characters.{name}.hopf", doc.hopf, ch.hopf, "hopf algebra")
        hdim = _static_hopf_dim(doc.hopf[ch.hopf]) if ch.hopf in doc.hopf else None
        if hdim is not None and len(ch.values) != hdim:
            errors.append((f"characters.{name}.values", f"{len(ch.values)} values for dimension {hdim}"))
    for name, m in doc.morphisms.items():
        where = f"morphisms.{name}"
        ref(f"{where}.algebra", doc.algebras, m.algebra, "algebra")
        ref(f"{where}.hopf", doc.hopf, m.hopf, "hopf algebra")
        if m.algebra in doc.algebras:
            dim = _static_algebra_dim(doc.algebras[m.algebra])
        elif m.hopf in doc.hopf:
            dim = _static_hopf_dim(doc.hopf[m.hopf])
        else:
            dim = None
        _check_matrix(f"{where}.matrix", m.matrix, dim, errors)
    for name, b in doc.bimodules.items():
        ref(f"bimodules.{name}.action", doc.actions, b.action, "action")
        ref(f"bimodules.{name}.twist", doc.morphisms, b.twist, "morphism")
        if b.kind == "twisted" and b.twist is None:
            errors.append((f"bimodules.{name}.twist", "a twisted bimodule needs a twist"))
    seen = set()
    for k, task in enumerate(doc.tasks):
        where = f"tasks[{k}]"
        if task.name in seen:
            errors.append((f"{where}.name", f"duplicate task name {task.name!r}"))
        seen.add(task.name)
        ref(f"{where}.hopf", doc.hopf, task.hopf, "hopf algebra")
        ref(f"{where}.algebra", doc.algebras, task.algebra, "algebra")
        ref(f"{where}.action", doc.actions, task.action, "action")
        ref(f"{where}.quiver", doc.quivers, task.quiver, "quiver")
        ref(f"{where}.bimodule", doc.bimodules, task.bimodule, "bimodule")
        ref(f"{where}.sigma", doc.morphisms, task.sigma, "morphism")
        ref(f"{where}.character", doc.characters, task.character, "character")
    return errors


def parse_workspace(text: str) -> WorkspaceDocument:
    """Parse and validate a workspace document.

    An empty or blank document is an empty workspace.

    Raises:
        WorkspaceError: with ``line:column`` entries for syntax errors and
            dotted paths for schema, reference and dimension errors
    """
    if not text.strip():
        return WorkspaceDocument()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise WorkspaceError([(f"{e.lineno}:{e.colno}", e.msg)]) from None
    if not isinstance(data, dict):
        raise WorkspaceError([("1:1", "a workspace must be an object")])
    try:
        doc = WorkspaceDocument.model_validate(data)
    except PydanticValidationError as e:
        entries = [(".".join(str(part) for part in err["loc"]) or "<root>", err["msg"]) for err in e.errors()]
        raise WorkspaceError(entries) from None
    errors = cross_check(doc)
    if errors:
        raise WorkspaceError(errors)
    logger.debug(f"Parsed workspace over {doc.field_descriptor} with {len(doc.tasks)} tasks")
    return doc


# --- construction ------------------------------------------------------------------

class Workspace:
    """Named objects of a validated document, built on first use and shared between tasks.

    Raises:
        WorkspaceError: an object fails to build; the entry names its path
    """

    def __init__(self, document: WorkspaceDocument, field: Optional[str] = None, source: Optional[str] = None):
        self.document = document
        descriptor = field or document.field_descriptor
        try:
            self.field = GroundField.parse(descriptor)
        except SmashcalcError as e:
            raise WorkspaceError([("field", str(e))]) from None
        self.source = source
        self.logger = logging.getLogger(f"smashcalc.tasks.{self.__class__.__name__.lower()}")
        self._objects: Dict[Tuple[str, str], Any] = {}
        self._lock = threading.RLock()

    @classmethod
    def from_text(cls, text: str, **kwargs) -> "Workspace":
        return cls(parse_workspace(text), **kwargs)

    @classmethod
    def from_path(cls, path: Union[str, FilePath], **kwargs) -> "Workspace":
        try:
            text = FilePath(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise WorkspaceError([(str(path), str(e))]) from None
        kwargs.setdefault("source", str(path))
        return cls(parse_workspace(text), **kwargs)

    # --- tasks -------------------------------------------------------------------

    @property
    def tasks(self) -> List[TaskSpec]:
        return list(self.document.tasks)

    def task_names(self) -> List[str]:
        return [t.name for t in self.document.tasks]

    def task(self, name: str) -> Optional[TaskSpec]:
        for t in self.document.tasks:
            if t.name == name:
                return t
        return None

    # --- objects -----------------------------------------------------------------

    def _get(self, table: str, name: str, build: Callable[[Any], Any]) -> Any:
        key = (table, name)
        with self._lock:
            if key in self._objects:
                return self._objects[key]
            specs = getattr(self.document, table)
            if name not in specs:
                raise WorkspaceError([(table, f"unknown name {name!r}")])
            try:
                obj = build(specs[name])
            except WorkspaceError:
                raise
            except (SmashcalcError, ValueError, KeyError, IndexError) as e:
                raise WorkspaceError([(f"{table}.{name}", str(e))]) from e
            self.logger.debug(f"Built {table}.{name}: {obj!r}")
            self._objects[key] = obj
            return obj

    def _matrix(self, rows: Matrix) -> LinearMap:
        if not rows:
            return LinearMap.zero(self.field, 0, 0)
        return LinearMap.from_rows(self.field, rows)

    def _hopf_index(self, H: HopfAlgebra, label: str, where: str) -> int:
        if label in H.labels:
            return H.labels.index(label)
        raise WorkspaceError([(where, f"{H.name} has no basis element {label!r}")])

    def hopf(self, name: str) -> HopfAlgebra:
        F = self.field

        def build(spec: HopfSpec) -> HopfAlgebra:
            if spec.kind == "trivial":
                return trivial_hopf(F)
            if spec.kind == "cyclic":
                return cyclic_group_algebra(F, spec.order, generator=spec.generator)
            if spec.kind == "dual-cyclic":
                return dual_cyclic_group_algebra(F, spec.order)
            if spec.kind == "sweedler":
                return sweedler_algebra(F)
            if spec.kind == "group":
                return group_algebra(F, spec.table, labels=spec.labels, name=name)
            if spec.kind == "matrix-group":
                return matrix_group_algebra(F, spec.generators, name=name)
            algebra = FinDimAlgebra(F, spec.labels, _structure(F, spec.mul), {i: F.element(c) for i, c in spec.unit},
                                    name=name)
            comul: Dict[int, Dict[Tuple[int, int], Any]] = {}
            for h, h1, h2, c in spec.comul:
                comul.setdefault(h, {})[(h1, h2)] = F.element(c)
            return HopfAlgebra(algebra, comul, [F.element(c) for c in spec.counit], self._matrix(spec.antipode),
                               name=name)

        return self._get("hopf", name, build)

    def quiver(self, name: str) -> Quiver:
        return self._get("quivers", name,
                         lambda spec: Quiver(spec.vertices, [tuple(a) for a in spec.arrows], name=name))

    def algebra(self, name: str) -> FinDimAlgebra:
        F = self.field

        def build(spec: AlgebraSpec) -> FinDimAlgebra:
            if spec.kind == "ground":
                return FinDimAlgebra.ground(F)
            if spec.kind == "truncated-polynomial":
                return FinDimAlgebra.truncated_polynomial(F, spec.order, variable=spec.variable)
            if spec.kind == "path":
                return path_algebra(self.quiver(spec.quiver), F, spec.length)
            return FinDimAlgebra(F, spec.labels, _structure(F, spec.mul), {i: F.element(c) for i, c in spec.unit},
                                 degrees=spec.degrees, name=name)

        return self._get("algebras", name, build)

    def action(self, name: str) -> Union[ModuleAlgebraAction, QuiverAction, PolynomialModuleAlgebra]:
        """The action as declared: a quiver action and a polynomial action keep their own types."""

        def build(spec: ActionSpec):
            H = self.hopf(spec.hopf)
            where = f"actions.{name}"
            if spec.kind == "quiver":
                vertex_maps = {self._hopf_index(H, g, f"{where}.vertices"): m for g, m in spec.vertices.items()}
                arrow_maps = {self._hopf_index(H, g, f"{where}.arrows"): m for g, m in spec.arrows.items()}
                return QuiverAction(H, self.quiver(spec.quiver), vertex_maps, arrow_maps,
                                    length_bound=spec.length, name=name)
            if spec.kind == "polynomial":
                if spec.operators is not None:
                    n = spec.variables if spec.variables is not None else len(spec.operators[0])
                    return PolynomialModuleAlgebra(n, H, [self._matrix(m) for m in spec.operators],
                                                   truncation=spec.truncation, name=name)
                if H.group_table is not None and H.group_elements and isinstance(H.group_elements[0], tuple):
                    return PolynomialModuleAlgebra.from_matrix_group(H, truncation=spec.truncation, name=name)
                return PolynomialModuleAlgebra.trivial(spec.variables or 0, H, truncation=spec.truncation, name=name)
            A = self.algebra(spec.algebra)
            augmentation = [self.field.element(c) for c in spec.augmentation] if spec.augmentation else None
            if spec.kind == "trivial":
                return ModuleAlgebraAction.trivial(H, A, name=name, augmentation=augmentation)
            if spec.kind == "matrices":
                return ModuleAlgebraAction(H, A, [self._matrix(m) for m in spec.operators], name=name,
                                           augmentation=augmentation)
            images = {self._hopf_index(H, g, f"{where}.images"): self._matrix(m) for g, m in spec.images.items()}
            return ModuleAlgebraAction.from_group_images(H, A, images, name=name, augmentation=augmentation)

        return self._get("actions", name, build)

    def module_action(self, name: str) -> ModuleAlgebraAction:
        """The action as a ``ModuleAlgebraAction``; polynomial actions are truncated."""
        act = self.action(name)
        if isinstance(act, QuiverAction):
            return act.module_algebra_action()
        if isinstance(act, PolynomialModuleAlgebra):
            with self._lock:
                key = ("truncated", name)
                if key not in self._objects:
                    self._objects[key] = act.truncated_action()
                return self._objects[key]
        return act

    def character(self, name: str) -> Character:
        F = self.field
        return self._get("characters", name,
                         lambda spec: Character(self.hopf(spec.hopf), [F.element(v) for v in spec.values], name=name))

    def morphism(self, name: str) -> LinearMap:
        def build(spec: MorphismSpec) -> LinearMap:
            dim = self.algebra(spec.algebra).dim if spec.algebra is not None else self.hopf(spec.hopf).dim
            m = self._matrix(spec.matrix)
            if m.shape != (dim, dim):
                raise WorkspaceError([(f"morphisms.{name}.matrix", f"shape {m.shape}, expected {(dim, dim)}")])
            return m

        return self._get("morphisms", name, build)

    def bimodule(self, name: str) -> EquivariantBimodule:
        def build(spec: BimoduleSpec) -> EquivariantBimodule:
            act = self.module_action(spec.action)
            if spec.kind == "twisted":
                return EquivariantBimodule.twisted(act, self.morphism(spec.twist), index=spec.index, name=name)
            return EquivariantBimodule.regular(act, index=spec.index)

        return self._get("bimodules", name, build)

    def summary(self) -> Dict[str, Any]:
        doc = self.document
        return {
            "field": self.field.name,
            "hopf": sorted(doc.hopf),
            "algebras": sorted(doc.algebras),
            "quivers": sorted(doc.quivers),
            "actions": sorted(doc.actions),
            "tasks": [{"name": t.name, "kind": t.kind} for t in doc.tasks],
        }

    def __repr__(self) -> str:
        return f"Workspace({self.source or '<text>'}, field={self.field.name}, tasks={len(self.document.tasks)})"


def _structure(F: GroundField, entries: List[Entry]) -> Dict[Tuple[int, int], Dict[int, Any]]:
    mul: Dict[Tuple[int, int], Dict[int, Any]] = {}
    for i, j, k, c in entries:
        value = F.element(c)
        if value:
            target = mul.setdefault((i, j), {})
            target[k] = target.get(k, F.zero) + value
    return mul
