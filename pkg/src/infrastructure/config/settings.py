from pathlib import Path
from typing import Optional
import logging
from dataclasses import dataclass, asdict, field, fields
import os
import yaml
from threading import Lock
import sys

CONFIG_ENV_VAR = "LAPLACIAN_BOUNDS_CONFIG"
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass
class ComplexSettings:
    """Límites de enumeración de complejos"""
    max_dim: int = 6
    max_faces: int = 2_000_000


@dataclass
class SpectralSettings:
    """Parámetros del método de Jacobi y del cálculo de núcleos"""
    max_sweeps: int = 30
    convergence_tolerance: float = 1e-13
    symmetry_tolerance: float = 1e-12
    kernel_factor: int = 64


@dataclass
class BoundSettings:
    """Tolerancias y límites de las comprobaciones de cotas"""
    report_tolerance: float = 1e-7
    count_tolerance: float = 1e-9
    certificate_tolerance: float = 1e-9
    subset_cap: int = 5_000_000
    packing_vertex_cap: int = 24
    tolerance_scale: float = 1.0


@dataclass
class LogSettings:
    """Configuraciones de logging"""
    log_level: str = "WARNING"
    log_file: str = "laplacian_bounds.log"
    console_logging: bool = True
    file_logging: bool = False


@dataclass
class AppSettings:
    """Configuración principal de la aplicación"""
    complex: ComplexSettings = field(default_factory=ComplexSettings)
    spectral: SpectralSettings = field(default_factory=SpectralSettings)
    bounds: BoundSettings = field(default_factory=BoundSettings)
    log: LogSettings = field(default_factory=LogSettings)


SECTIONS = {
    'complex': ComplexSettings,
    'spectral': SpectralSettings,
    'bounds': BoundSettings,
    'log': LogSettings
}


class Settings:
    """
    Gestor de configuraciones de la aplicación.
    Implementa el patrón Singleton para asegurar una única instancia.
    """
    _instance = None
    _lock = Lock()

    def __new__(cls):
        with cls._lock:
            if cls._instance is None:
                cls._instance = super(Settings, cls).__new__(cls)
                cls._instance._initialized = False
            return cls._instance

    def __init__(self):
        if self._initialized:
            return

        self._initialized = True
        self._settings = AppSettings()
        self.logger = logging.getLogger(__name__)
        self._config_file = self._get_config_path()
        self.load()

    @classmethod
    def reset_instance(cls):
        """Descarta la instancia actual (la siguiente se crea desde cero)"""
        with cls._lock:
            cls._instance = None

    def _get_config_path(self) -> Path:
        """Determina la ruta del archivo de configuración según el sistema"""
        explicit = os.getenv(CONFIG_ENV_VAR)
        if explicit:
            return Path(explicit)
        if sys.platform == "win32":
            config_dir = Path(os.getenv('APPDATA', Path.home())) / "LaplacianBounds"
        else:
            config_dir = Path.home() / ".config" / "LaplacianBounds"
        return config_dir / "settings.yaml"

    @property
    def config_file(self) -> Path:
        return self._config_file

    def use_file(self, path: Path) -> bool:
        """Cambia el archivo de configuración y lo carga"""
        self._config_file = Path(path)
        self._settings = AppSettings()
        return self.load()

    def configure_logging(self, level: Optional[str] = None):
        """Configura los handlers del paquete una sola vez"""
        package_logger = logging.getLogger("src")
        log = self._settings.log
        if not package_logger.handlers:
            formatter = logging.Formatter(LOG_FORMAT)

            if log.file_logging:
                file_handler = logging.FileHandler(log.log_file)
                file_handler.setFormatter(formatter)
                package_logger.addHandler(file_handler)

            if log.console_logging:
                console_handler = logging.StreamHandler()
                console_handler.setFormatter(formatter)
                package_logger.addHandler(console_handler)

        package_logger.setLevel(getattr(logging, (level or log.log_level).upper(), logging.WARNING))

    def load(self) -> bool:
        """Carga las configuraciones desde el archivo"""
        try:
            if self._config_file.exists():
                with self._config_file.open('r', encoding='utf-8') as f:
                    data = yaml.safe_load(f)

                if data:
                    if not isinstance(data, dict):
                        raise ValueError("el archivo debe contener una sección por clave")
                    # Cargar configuraciones por sección
                    for name, section in SECTIONS.items():
                        if name in data:
                            setattr(self._settings, name, section(**data[name]))

                self.logger.info("Configuraciones cargadas correctamente")
                return True
        except Exception as e:
            self.logger.error(f"Error al cargar configuraciones: {str(e)}")
            self._settings = AppSettings()
        return False

    def save(self) -> bool:
        """Guarda las configuraciones actuales en el archivo"""
        try:
            settings_dict = {name: asdict(getattr(self._settings, name)) for name in SECTIONS}

            self._config_file.parent.mkdir(parents=True, exist_ok=True)
            with self._config_file.open('w', encoding='utf-8') as f:
                yaml.dump(settings_dict, f, default_flow_style=False)

            self.logger.info("Configuraciones guardadas correctamente")
            return True
        except Exception as e:
            self.logger.error(f"Error al guardar configuraciones: {str(e)}")
            return False

    def get(self) -> AppSettings:
        """Retorna las configuraciones actuales"""
        return self._settings

    def _update(self, name: str, **kwargs):
        section = getattr(self._settings, name)
        known = {f.name for f in fields(section)}
        for key, value in kwargs.items():
            if key in known:
                setattr(section, key, value)
        self.save()

    def update_complex(self, **kwargs):
        """Actualiza los límites de enumeración"""
        self._update('complex', **kwargs)

    def update_spectral(self, **kwargs):
        """Actualiza los parámetros del solver"""
        self._update('spectral', **kwargs)

    def update_bounds(self, **kwargs):
        """Actualiza tolerancias y límites de las cotas"""
        self._update('bounds', **kwargs)

    def update_log(self, **kwargs):
        """Actualiza configuraciones de logging"""
        self._update('log', **kwargs)
        self.configure_logging()

    def reset_to_defaults(self):
        """Restablece todas las configuraciones a sus valores por defecto"""
        self._settings = AppSettings()
        self.save()
        self.logger.info("Configuraciones restablecidas a valores por defecto")


def get_settings() -> Settings:
    """Función de utilidad para obtener la instancia de Settings"""
    return Settings()
