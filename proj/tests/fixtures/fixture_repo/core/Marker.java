package fixture.core;

public @interface Marker {
    String value() default "";
}
