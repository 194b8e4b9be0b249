import typer

from app.core.settings import settings
from app.commands import catalog, classify, invariants, selftest, snf, verify
from app.utils.logger import setup_logger


logger = setup_logger(
    name=settings.LOGGER_NAME, log_level=settings.LOG_LEVEL, log_file=settings.LOGGER_PATH
)

app = typer.Typer(
    name="sl2-schemes",
    help="Linearly reductive finite subgroup schemes of SL2 and their ADE invariant rings",
    no_args_is_help=True,
    add_completion=False,
)


def include_router(router: typer.Typer) -> None:
    """Mount every command of a command module on the application."""
    app.registered_commands.extend(router.registered_commands)


include_router(catalog.router)
include_router(invariants.router)
include_router(classify.router)
include_router(verify.router)
include_router(snf.router)
include_router(selftest.router)


if __name__ == "__main__":
    logger.info("Starting sl2-schemes")
    app()
