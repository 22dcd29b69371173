"""
Prefect task definitions that back each stage of the census flow.
"""
from datetime import datetime, timezone
from pathlib import Path

from prefect import get_run_logger, task
from prefect.cache_policies import NO_CACHE

from src.abgroup.group import AbelianGroup
from src.canon.census import CensusRecord, enumerate_canonical, verify_spec
from src.canon.spec import InvolutionSpec
from src.common.config import settings
from src.common.utils import append_jsonl


@task(name="Enumerate canonical specs", cache_policy=NO_CACHE)
def task_enumerate_specs(
    invariant_factors: tuple[int, ...],
    size: int,
    fine: int,
    exact: bool = False,
) -> list[InvolutionSpec]:
    """
    List every valid canonical spec for the group and bounds, in canonical order.
    """
    logger = get_run_logger()
    group = AbelianGroup(tuple(invariant_factors))
    specs = enumerate_canonical(group, size, fine, exact=exact)
    logger.info(f"{len(specs)} valid spec(s) over {group} (size <= {size}, fine = {fine})")
    return specs


@task(name="Verify spec", cache_policy=NO_CACHE)
def task_verify_spec(spec: InvolutionSpec, lie_jordan: bool = False) -> CensusRecord:
    """
    Build the involution of one spec and run the kind, grading and structure checks.
    """
    record = verify_spec(spec, lie_jordan=lie_jordan)
    if not record.ok:
        get_run_logger().warning(f"verification failed for {spec}: {record.diagnostics}")
    return record


@task(name="Write census", cache_policy=NO_CACHE)
def task_write_census(
    records: list[CensusRecord],
    label: str,
    out_dir: str | None = None,
) -> str:
    """
    Append one JSON line per record under the census directory; returns the file path.
    """
    stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S")
    out_path = Path(out_dir or settings.CENSUS_DIR) / f"{label}-{stamp}.jsonl"
    written = append_jsonl((r.to_json() for r in records), str(out_path))
    get_run_logger().info(f"wrote {written} record(s) -> {out_path}")
    return str(out_path)
