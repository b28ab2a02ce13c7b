from .yaml_config_loader import YAMLConfigLoader

__all__ = ["YAMLConfigLoader"]
