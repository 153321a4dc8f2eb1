import os
import logging
import json
from datetime import datetime

from colorama import Fore, Style
from tqdm import tqdm

# Default log format
DEFAULT_LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

TOOL_VERSION = "1.0.0"

LEVEL_COLORS = {
    logging.DEBUG: Style.DIM,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class ProgressAwareHandler(logging.StreamHandler):
    """Console handler that writes through tqdm so records do not break progress bars."""

    def emit(self, record):
        try:
            message = self.format(record)
            color = LEVEL_COLORS.get(record.levelno, "")
            if color and getattr(self.stream, "isatty", lambda: False)():
                message = f"{color}{message}{Style.RESET_ALL}"
            tqdm.write(message, file=self.stream)
        except Exception:
            self.handleError(record)


def setup_logging(log_level=logging.INFO, log_file=None, verbose=False):
    """
    Configure the 'recolor' logger hierarchy.

    Console records go to stderr so that stdout carries only reports and codes.

    Args:
        log_level (int): The logging level (e.g., logging.INFO, logging.WARNING)
        log_file (str): Optional path of a log file
        verbose (bool): Log solver progress at DEBUG level

    Returns:
        logging.Logger: The 'recolor' logger
    """
    level = logging.DEBUG if verbose else log_level
    logger = logging.getLogger('recolor')
    logger.setLevel(level)
    logger.propagate = False

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(DEFAULT_LOG_FORMAT)
    console = ProgressAwareHandler()
    console.setLevel(level)
    console.setFormatter(formatter)
    logger.addHandler(console)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir and not ensure_directory(log_dir):
            logger.warning(f"Logging to console only; cannot create {log_dir}")
        else:
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

    return logger


def get_logger(name):
    """Return a logger under the 'recolor' hierarchy."""
    if name != 'recolor' and not name.startswith('recolor.'):
        name = f"recolor.{name}"
    return logging.getLogger(name)


def ensure_directory(path):
    """
    Create a directory for logs or results if it is missing.

    Returns:
        bool: True if the directory exists afterwards
    """
    try:
        os.makedirs(path, exist_ok=True)
        return True
    except OSError as e:
        logging.getLogger('recolor').error(f"Could not create directory {path}: {e}")
        return False


def result_filename(label, timestamp):
    # ':' separates family parameters on the command line but is not portable in file names
    safe_label = label.replace(' ', '_').replace('/', '_').replace('\\', '_').replace(':', '-')
    return f"{safe_label}_{timestamp}.json"


def save_results_to_file(results, label, output_dir, logger=None):
    """
    Save a report, Gray code or hunt result to a timestamped JSON file.

    Args:
        results (dict): The document to save
        label (str): Short name used as the file prefix (e.g. "compute_cycle:5")
        output_dir (str): Directory to save the results
        logger (logging.Logger): Logger instance

    Returns:
        str: Path to the saved file, or None if saving failed
    """
    if logger is None:
        logger = logging.getLogger('recolor')

    if not ensure_directory(output_dir):
        return None

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    output_path = os.path.join(output_dir, result_filename(label, timestamp))

    document = dict(results)
    document["metadata"] = {
        "label": label,
        "timestamp": timestamp,
        "version": TOOL_VERSION
    }

    try:
        with open(output_path, 'w') as f:
            json.dump(document, f, indent=2)
        logger.info(f"Results saved to {output_path}")
        return output_path
    except (OSError, TypeError) as e:
        logger.error(f"Failed to save results: {e}")
        return None
