from typing import Optional

import typer

from app.core.constants import FORMAT_TEXT
from app.core.settings import settings
from app.commands.common import check_format, emit
from app.exceptions.custom_exceptions import ValidationException
from app.middleware.command_stack import command_stack
from app.schemas.scheme import SelftestReport
from app.services.selftest import SelftestService

router = typer.Typer()


@router.command("selftest")
def cmd_selftest(
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed (default from settings)"),
    count: int = typer.Option(100, "--count", help="Conjugations per instance"),
    fmt: str = typer.Option(FORMAT_TEXT, "--format", help="text or json"),
):
    """
    Classify randomly conjugated catalog schemes back to their types
    """
    def run():
        check_format(fmt)
        if count < 1:
            raise ValidationException(f"--count must be positive, got {count}")
        chosen = settings.DEFAULT_SEED if seed is None else seed
        cases = SelftestService.run(chosen, count)
        passed = all(
            c.recovered == c.trials and (c.normalized is None or c.normalized == c.trials) for c in cases
        )
        emit(SelftestReport(seed=chosen, cases=cases, passed=passed), fmt)
        if not passed:
            raise ValidationException(f"round trips failed for seed {chosen}")

    command_stack.run("selftest", run)
