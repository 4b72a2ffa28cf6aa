"""Batch solve of many countries on a bounded worker pool."""

import time
from dataclasses import dataclass, field

import structlog
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn

from hazard_rate.energy.audit import audit_solution
from hazard_rate.energy.lcoh import compute_lcoh
from hazard_rate.energy.problem import build_problem
from hazard_rate.energy.solver import solve
from hazard_rate.models.energy import LCOHResult, SystemCase, Technology
from hazard_rate.utils.parallel import ParallelExecutor, TaskResult

logger = structlog.get_logger()


@dataclass
class CaseFailure:
    """A country whose solve did not finish."""

    iso3: str
    code: str
    message: str


@dataclass
class PortfolioResult:
    """Merged batch outcome, both lists ordered by iso3."""

    results: list[LCOHResult] = field(default_factory=list)
    failures: list[CaseFailure] = field(default_factory=list)


def solve_case(
    case: SystemCase,
    fixed_capacities: dict[Technology, float] | None = None,
) -> LCOHResult:
    """Build, solve, audit and price one country."""
    started = time.perf_counter()
    solution = solve(build_problem(case, fixed_capacities))
    result = compute_lcoh(case, solution)

    violations = audit_solution(case, solution)
    if violations:
        logger.warning("Solution audit failed", iso3=case.country.iso3, violations=violations)
        result.status = "audit_failed"
        result.extra["violations"] = violations

    logger.debug(
        "Solved country",
        iso3=case.country.iso3,
        lcoh=round(result.lcoh, 6),
        objective=round(solution.objective, 2),
        seconds=round(time.perf_counter() - started, 3),
    )
    return result


class PortfolioSolver:
    """Solves one SystemCase per country, in parallel when jobs > 1."""

    def __init__(self, jobs: int = 4):
        """
        Initialize the solver.

        Args:
            jobs: Maximum concurrent solves
        """
        self.jobs = jobs

    def solve(self, cases: list[SystemCase], show_progress: bool = False) -> PortfolioResult:
        """
        Solve every case; a failing country never stops the batch.

        Args:
            cases: One case per country
            show_progress: Render a rich progress bar on stderr

        Returns:
            PortfolioResult merged deterministically by iso3
        """
        logger.info("Starting portfolio solve", countries=len(cases), jobs=self.jobs)
        executor = ParallelExecutor(max_workers=self.jobs)

        if show_progress:
            with Progress(
                SpinnerColumn(),
                TextColumn("[progress.description]{task.description}"),
                BarColumn(),
                TaskProgressColumn(),
                TextColumn("[cyan]{task.completed}/{task.total}"),
                console=Console(stderr=True),
            ) as progress:
                task = progress.add_task(f"Solving ({self.jobs} workers)...", total=len(cases))

                def on_progress(completed, total, case, task_result):
                    progress.update(task, completed=completed)

                outcomes = executor.execute(solve_case, cases, on_progress=on_progress)
        else:
            outcomes = executor.execute(solve_case, cases)

        merged = self._merge(outcomes)
        logger.info(
            "Portfolio solve complete",
            solved=len(merged.results),
            failed=len(merged.failures),
        )
        return merged

    @staticmethod
    def _merge(outcomes: list[TaskResult]) -> PortfolioResult:
        merged = PortfolioResult()
        for outcome in sorted(outcomes, key=lambda o: o.item.country.iso3):
            if outcome.success:
                merged.results.append(outcome.result)
            else:
                merged.failures.append(
                    CaseFailure(
                        iso3=outcome.item.country.iso3,
                        code=outcome.error_code or "ERROR",
                        message=outcome.error or "",
                    )
                )
                logger.error(
                    "Country solve failed",
                    iso3=outcome.item.country.iso3,
                    code=outcome.error_code,
                )
        return merged


def solve_portfolio(cases: list[SystemCase], jobs: int = 4) -> PortfolioResult:
    """Solve all cases on a pool of `jobs` workers."""
    return PortfolioSolver(jobs=jobs).solve(cases)
