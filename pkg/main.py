import json
import os
import sys
from pathlib import Path

from loguru import logger
from pydantic import ValidationError

from cli.commands import EXIT_COMPUTATION, EXIT_USAGE, run_command
from config.config_model import ConfigModel, LoggingConfig

CONFIG_PATH = Path(os.environ.get("AGPOINTS_CONFIG", "config.json"))


def setup_logging(settings: LoggingConfig | None = None):
    """
    Set up logging for the command-line tool.

    stdout carries command output only, so the console sink writes to stderr.
    Without settings (before the config is loaded) only the console sink is added.
    """
    file_sink = settings is not None and settings.file_sink
    settings = settings or LoggingConfig()
    logger.remove()
    logger.add(
        sys.stderr,
        level=settings.level,
        serialize=False,
        format="{level}: {message}",
    )
    if not file_sink:
        return
    os.makedirs(settings.log_dir, exist_ok=True)
    # everything at DEBUG, one file per day
    logger.add(
        settings.log_dir / "agpoints.log",
        level="DEBUG",
        serialize=False,
        rotation="00:00",
        retention=settings.retention,
        compression="zip",
        format="{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{function} | {message}",
    )
    # verify-paper verdicts only
    logger.add(
        settings.log_dir / "verify.log",
        filter=lambda record: record["extra"].get("verify", False),
        rotation="00:00",
        retention=settings.retention,
        compression="zip",
        format="{time:YYYY-MM-DD HH:mm:ss} | {message}",
    )


def _generate_skeleton(path: Path):
    """Write a config.json with default values."""
    skeleton = ConfigModel()
    with open(path, "w", encoding="utf-8") as fw:
        fw.write(skeleton.model_dump_json(indent=4))
    logger.info(f"Created skeleton '{path}' with default values")


def load_config(path: Path = CONFIG_PATH) -> ConfigModel:
    """
    Load configuration from config.json; AGPOINTS_* environment variables win.

    A missing file is replaced by a skeleton with the defaults.
    """
    logger.debug(f"Loading configuration from '{path}'")

    if not path.exists():
        logger.warning(f"'{path}' not found, creating skeleton")
        _generate_skeleton(path)

    try:
        with open(path, encoding="utf-8") as f:
            raw = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"Error reading '{path}': {e}")
        sys.exit(EXIT_USAGE)

    try:
        config_model = ConfigModel(**raw)
        logger.debug(f"Configuration loaded: version={config_model.version}, field={config_model.field_spec}")
    except ValidationError as ve:
        logger.error("Configuration validation failed:")
        for err in ve.errors():
            loc = " -> ".join(str(part) for part in err.get("loc", []))
            logger.error(f"  {loc}: {err.get('msg', '')}")
        sys.exit(EXIT_USAGE)

    return config_model


@logger.catch(reraise=False, default=EXIT_COMPUTATION)
def main(argv: list[str] | None = None) -> int:
    setup_logging()
    config = load_config()
    setup_logging(config.logging)
    return run_command(sys.argv[1:] if argv is None else argv, sys.stdout, config)


if __name__ == "__main__":
    sys.exit(main())
