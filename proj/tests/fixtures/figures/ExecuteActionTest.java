package org.example.build;

import static org.junit.Assert.fail;

import org.junit.Test;

public class ExecuteActionTest {
    private final BuildAction action = new BuildAction();

    @Test
    public void testExecute_Action() {
        try {
            action.execute();
            fail("BuildException expected");
        } catch (BuildException expected) {
            // expected
        }
    }
}
